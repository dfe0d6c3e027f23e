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

#include "hypersre/gf2.h"

#include <algorithm>
#include <bit>

#include "hypersre/errors.h"

namespace hypersre {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

void check_dims(size_t rows, size_t cols) {
    if (rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
        throw CapacityError(
            "matrix dimension " + std::to_string(std::max(rows, cols)) + " exceeds the limit of " +
            std::to_string(kMaxMatrixDim));
    }
}

}  // namespace

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols)
    : num_rows_(num_rows), num_cols_(num_cols), words_per_row_(words_for(num_cols)) {
    check_dims(num_rows, num_cols);
    words_.assign(num_rows_ * words_per_row_, 0);
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw ContractViolation("ragged rows in BitMatrix::from_strings");
        }
        for (size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1' && ch != '.') {
                throw ContractViolation(std::string("unexpected character '") + ch + "' in matrix literal");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

void BitMatrix::set(size_t row, size_t col, bool value) {
    uint64_t &w = words_[row * words_per_row_ + col / 64];
    uint64_t mask = uint64_t{1} << (col % 64);
    w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::xor_row(size_t dst, size_t src) {
    uint64_t *d = words_.data() + dst * words_per_row_;
    const uint64_t *s = words_.data() + src * words_per_row_;
    for (size_t k = 0; k < words_per_row_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(
        words_.begin() + a * words_per_row_, words_.begin() + (a + 1) * words_per_row_,
        words_.begin() + b * words_per_row_);
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &other) {
    if (num_rows_ != other.num_rows_ || num_cols_ != other.num_cols_) {
        throw ContractViolation("shape mismatch in BitMatrix xor");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitMatrix::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BitMatrix::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitMatrix::padding_is_clean() const {
    size_t used = num_cols_ % 64;
    if (used == 0 || words_per_row_ == 0) {
        return true;
    }
    uint64_t pad_mask = ~((uint64_t{1} << used) - 1);
    for (size_t r = 0; r < num_rows_; r++) {
        if (words_[r * words_per_row_ + words_per_row_ - 1] & pad_mask) {
            return false;
        }
    }
    return true;
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(num_rows_ * (num_cols_ + 1));
    for (size_t r = 0; r < num_rows_; r++) {
        for (size_t c = 0; c < num_cols_; c++) {
            out.push_back(get(r, c) ? '1' : '.');
        }
        out.push_back('\n');
    }
    return out;
}

size_t rank_single_word_rows(std::span<uint64_t> rows) {
    // Each nonzero row becomes a pivot on its lowest set bit; later rows
    // containing that bit are reduced by it.
    size_t r = 0;
    const size_t n = rows.size();
    for (size_t i = 0; i < n; i++) {
        uint64_t v = rows[i];
        if (v == 0) {
            continue;
        }
        r++;
        uint64_t pivot = v & (~v + 1);
        for (size_t j = i + 1; j < n; j++) {
            if (rows[j] & pivot) {
                rows[j] ^= v;
            }
        }
    }
    return r;
}

size_t rank(const BitMatrix &m) {
    if (m.words_per_row() == 1) {
        std::vector<uint64_t> rows(m.words().begin(), m.words().end());
        return rank_single_word_rows(rows);
    }
    BitMatrix work = m;
    size_t pivot_row = 0;
    for (size_t col = 0; col < work.num_cols() && pivot_row < work.num_rows(); col++) {
        size_t found = pivot_row;
        while (found < work.num_rows() && !work.get(found, col)) {
            found++;
        }
        if (found == work.num_rows()) {
            continue;
        }
        work.swap_rows(pivot_row, found);
        for (size_t r = pivot_row + 1; r < work.num_rows(); r++) {
            if (work.get(r, col)) {
                work.xor_row(r, pivot_row);
            }
        }
        pivot_row++;
    }
    return pivot_row;
}

bool is_strictly_upper(const BitMatrix &m) {
    if (!m.is_square()) {
        return false;
    }
    for (size_t r = 0; r < m.num_rows(); r++) {
        for (size_t c = 0; c <= r; c++) {
            if (m.get(r, c)) {
                return false;
            }
        }
    }
    return true;
}

bool is_symmetric(const BitMatrix &m) {
    return m.is_square() && transpose(m) == m;
}

bool is_alternating(const BitMatrix &m) {
    if (!is_symmetric(m)) {
        return false;
    }
    for (size_t i = 0; i < m.num_rows(); i++) {
        if (m.get(i, i)) {
            return false;
        }
    }
    return true;
}

BitMatrix symmetrize_upper(const BitMatrix &c) {
    if (!c.is_square()) {
        throw ContractViolation(
            "symmetrize_upper needs a square matrix, got " + std::to_string(c.num_rows()) + "x" +
            std::to_string(c.num_cols()));
    }
    if (!is_strictly_upper(c)) {
        throw ContractViolation("symmetrize_upper needs a strictly upper-triangular matrix");
    }
    return c ^ transpose(c);
}

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_cols() != b.num_rows()) {
        throw ContractViolation(
            "multiply: inner dimensions differ (" + std::to_string(a.num_cols()) + " vs " +
            std::to_string(b.num_rows()) + ")");
    }
    BitMatrix out(a.num_rows(), b.num_cols());
    for (size_t r = 0; r < a.num_rows(); r++) {
        auto dst = out.row(r);
        for (size_t k = 0; k < a.num_cols(); k++) {
            if (!a.get(r, k)) {
                continue;
            }
            auto src = b.row(k);
            for (size_t w = 0; w < dst.size(); w++) {
                dst[w] ^= src[w];
            }
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix &m) {
    BitMatrix out(m.num_cols(), m.num_rows());
    for (size_t r = 0; r < m.num_rows(); r++) {
        auto row = m.row(r);
        for (size_t w = 0; w < row.size(); w++) {
            uint64_t bits = row[w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                out.set(c, r, true);
            }
        }
    }
    return out;
}

bool is_invertible(const BitMatrix &m) {
    if (!m.is_square()) {
        throw ContractViolation("is_invertible needs a square matrix");
    }
    return rank(m) == m.num_rows();
}

bool dot(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    uint64_t acc = 0;
    for (size_t k = 0; k < a.size(); k++) {
        acc ^= a[k] & b[k];
    }
    return std::popcount(acc) & 1;
}

bool bilinear(const BitMatrix &m, std::span<const uint64_t> v, std::span<const uint64_t> w) {
    bool acc = false;
    for (size_t wi = 0; wi < v.size(); wi++) {
        uint64_t bits = v[wi];
        while (bits) {
            size_t r = wi * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            acc ^= dot(m.row(r), w);
        }
    }
    return acc;
}

}  // namespace hypersre
