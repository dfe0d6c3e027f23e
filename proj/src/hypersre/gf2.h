// Copyright 2026 The hypersre Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERSRE_GF2_H
#define HYPERSRE_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hypersre {

/// Largest row or column count a BitMatrix accepts.
inline constexpr size_t kMaxMatrixDim = size_t{1} << 16;

/// Dense matrix over GF(2), rows packed into 64-bit words.
///
/// Column c of row r lives in bit (c % 64) of word (c / 64) of that row.
/// Padding bits past num_cols() are kept at zero by every mutating method,
/// so whole-word comparisons and popcounts are valid.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    /// Builds from rows of '0'/'1' characters. Mostly for tests.
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    size_t num_rows() const {
        return num_rows_;
    }
    size_t num_cols() const {
        return num_cols_;
    }
    size_t words_per_row() const {
        return words_per_row_;
    }
    bool is_square() const {
        return num_rows_ == num_cols_;
    }

    bool get(size_t row, size_t col) const {
        return (words_[row * words_per_row_ + col / 64] >> (col % 64)) & 1;
    }
    void set(size_t row, size_t col, bool value);
    void flip(size_t row, size_t col) {
        words_[row * words_per_row_ + col / 64] ^= uint64_t{1} << (col % 64);
    }

    std::span<uint64_t> row(size_t r) {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const uint64_t> row(size_t r) const {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    /// Row dst ^= row src.
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    /// Entrywise XOR; shapes must agree.
    BitMatrix &operator^=(const BitMatrix &other);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitMatrix &other) const = default;

    bool is_zero() const;
    size_t popcount() const;
    /// True when every bit past num_cols() in every row is zero.
    bool padding_is_clean() const;

    std::string str() const;

   private:
    size_t num_rows_ = 0;
    size_t num_cols_ = 0;
    size_t words_per_row_ = 0;
    std::vector<uint64_t> words_;
};

/// GF(2) row rank. The argument is not modified.
size_t rank(const BitMatrix &m);

/// In-place rank of a matrix whose rows fit in one word each. Destroys `rows`.
size_t rank_single_word_rows(std::span<uint64_t> rows);

/// Returns c + c^T for a square, strictly upper-triangular c.
BitMatrix symmetrize_upper(const BitMatrix &c);

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b);
BitMatrix transpose(const BitMatrix &m);
bool is_invertible(const BitMatrix &m);

bool is_strictly_upper(const BitMatrix &m);
bool is_symmetric(const BitMatrix &m);
/// Symmetric with zero diagonal.
bool is_alternating(const BitMatrix &m);

/// Packed GF(2) vector with the same word layout as a BitMatrix row.
using BitWords = std::vector<uint64_t>;

/// v^T m w over GF(2); v and w hold m.num_rows() / m.num_cols() bits.
bool bilinear(const BitMatrix &m, std::span<const uint64_t> v, std::span<const uint64_t> w);

/// Parity of the AND of two equally sized word spans.
bool dot(std::span<const uint64_t> a, std::span<const uint64_t> b);

}  // namespace hypersre

#endif
