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

#include "hypersre/quadform.h"

#include <bit>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypersre/errors.h"

namespace hypersre {

namespace {

void xor_into(BitWords &dst, const BitWords &src) {
    for (size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

bool bit_of(std::span<const uint64_t> v, size_t i) {
    return (v[i / 64] >> (i % 64)) & 1;
}

void check_upper(const BitMatrix &c, const char *what) {
    if (!c.is_square()) {
        throw ContractViolation(std::string(what) + " needs a square matrix");
    }
    if (!is_strictly_upper(c)) {
        throw ContractViolation(std::string(what) + " needs a strictly upper-triangular matrix");
    }
}

struct Pair {
    BitWords e;
    BitWords f;
};

}  // namespace

bool evaluate_form(const BitMatrix &c, std::span<const uint64_t> a) {
    bool acc = false;
    for (size_t w = 0; w < a.size(); w++) {
        uint64_t bits = a[w];
        while (bits) {
            size_t i = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            acc ^= dot(c.row(i), a);
        }
    }
    return acc;
}

bool evaluate_standard(const StandardForm &form, std::span<const uint64_t> a) {
    bool acc = false;
    for (size_t i = 0; i < form.pairs; i++) {
        acc ^= bit_of(a, 2 * i) && bit_of(a, 2 * i + 1);
    }
    if (form.r % 2 == 1) {
        acc ^= bit_of(a, form.r - 1);
    } else if (form.eta) {
        acc ^= bit_of(a, form.r - 2) ^ bit_of(a, form.r - 1);
    }
    return acc;
}

StandardForm standardize(const BitMatrix &c) {
    check_upper(c, "standardize");
    const size_t n = c.num_rows();
    const BitMatrix b = symmetrize_upper(c);
    auto form = [&](const BitWords &v) { return evaluate_form(c, v); };
    auto polar = [&](const BitWords &u, const BitWords &v) { return bilinear(b, u, v); };

    std::vector<BitWords> remaining;
    remaining.reserve(n);
    for (size_t i = 0; i < n; i++) {
        BitWords e(c.words_per_row(), 0);
        e[i / 64] |= uint64_t{1} << (i % 64);
        remaining.push_back(std::move(e));
    }

    // Symplectic Gram-Schmidt. Every vector left in `remaining` stays
    // orthogonal to all pairs extracted so far.
    std::vector<Pair> pairs;
    std::vector<BitWords> radical;
    size_t head = 0;
    while (head < remaining.size()) {
        BitWords v = std::move(remaining[head]);
        head++;
        size_t partner = remaining.size();
        for (size_t j = head; j < remaining.size(); j++) {
            if (polar(v, remaining[j])) {
                partner = j;
                break;
            }
        }
        if (partner == remaining.size()) {
            radical.push_back(std::move(v));
            continue;
        }
        BitWords u = std::move(remaining[partner]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(partner));
        for (size_t j = head; j < remaining.size(); j++) {
            bool with_u = polar(remaining[j], u);
            bool with_v = polar(remaining[j], v);
            if (with_u) {
                xor_into(remaining[j], v);
            }
            if (with_v) {
                xor_into(remaining[j], u);
            }
        }
        pairs.push_back({std::move(v), std::move(u)});
    }

    // Within a pair, Q(e + f) = Q(e) + Q(f) + 1, so a pair with exactly one
    // odd vector can be made even on both.
    auto clear_single = [&](Pair &p) {
        bool qe = form(p.e);
        bool qf = form(p.f);
        if (!qe && qf) {
            xor_into(p.f, p.e);
        } else if (qe && !qf) {
            xor_into(p.e, p.f);
        }
    };
    for (auto &p : pairs) {
        clear_single(p);
    }
    auto is_odd_pair = [&](const Pair &p) { return form(p.e) && form(p.f); };

    StandardForm out;
    out.pairs = pairs.size();

    std::optional<size_t> odd_radical;
    for (size_t k = 0; k < radical.size(); k++) {
        if (form(radical[k])) {
            odd_radical = k;
            break;
        }
    }

    std::vector<BitWords> tail;
    if (odd_radical) {
        // Q is linear on the radical and nonzero there. Shifting by the odd
        // radical vector clears the remaining odd pairs.
        BitWords w = radical[*odd_radical];
        for (auto &p : pairs) {
            if (is_odd_pair(p)) {
                xor_into(p.e, w);
                xor_into(p.f, w);
            }
        }
        tail.push_back(w);
        for (size_t k = 0; k < radical.size(); k++) {
            if (k == *odd_radical) {
                continue;
            }
            if (form(radical[k])) {
                xor_into(radical[k], w);
            }
            tail.push_back(std::move(radical[k]));
        }
        out.r = 2 * pairs.size() + 1;
    } else {
        // Two odd pairs (e1, f1), (e2, f2) become even ones via
        // e1 <- e1 + e2, f2 <- f2 + f1; at most one odd pair survives.
        std::vector<size_t> odd;
        for (size_t i = 0; i < pairs.size(); i++) {
            if (is_odd_pair(pairs[i])) {
                odd.push_back(i);
            }
        }
        for (size_t k = 0; k + 1 < odd.size(); k += 2) {
            Pair &p1 = pairs[odd[k]];
            Pair &p2 = pairs[odd[k + 1]];
            xor_into(p1.e, p2.e);
            xor_into(p2.f, p1.f);
            clear_single(p1);
            clear_single(p2);
        }
        if (odd.size() % 2 == 1) {
            Pair last = std::move(pairs[odd.back()]);
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(odd.back()));
            pairs.push_back(std::move(last));
            out.eta = true;
        }
        for (auto &w : radical) {
            tail.push_back(std::move(w));
        }
        out.r = 2 * pairs.size();
    }

    // Columns of P are the new basis vectors, in order.
    out.p = BitMatrix(n, n);
    size_t col = 0;
    auto place = [&](const BitWords &v) {
        for (size_t i = 0; i < n; i++) {
            if (bit_of(v, i)) {
                out.p.set(i, col, true);
            }
        }
        col++;
    };
    for (const auto &p : pairs) {
        place(p.e);
        place(p.f);
    }
    for (const auto &w : tail) {
        place(w);
    }
    return out;
}

RankRelation rank_relation(const BitMatrix &c) {
    check_upper(c, "rank_relation");
    RankRelation rel;
    rel.two_h = rank(symmetrize_upper(c));
    rel.r = standardize(c).r;
    if (rel.two_h != rel.r - rel.r % 2) {
        throw std::logic_error(
            "rank relation violated: rank(C+C^T)=" + std::to_string(rel.two_h) + " but r=" + std::to_string(rel.r));
    }
    return rel;
}

BitMatrix congruent_upper(const BitMatrix &c, const BitMatrix &p) {
    BitMatrix full = multiply(multiply(transpose(p), c), p);
    const size_t n = full.num_rows();
    BitMatrix out(n, n);
    for (size_t i = 0; i < n; i++) {
        out.set(i, i, full.get(i, i));
        for (size_t j = i + 1; j < n; j++) {
            out.set(i, j, full.get(i, j) ^ full.get(j, i));
        }
    }
    return out;
}

BitMatrix standard_matrix(size_t n, size_t r, bool eta) {
    if (r > n || (eta && (r % 2 == 1 || r == 0))) {
        throw ContractViolation("standard_matrix: inconsistent (n, r, eta)");
    }
    BitMatrix m(n, n);
    for (size_t i = 0; i + 1 < r; i += 2) {
        m.set(i, i + 1, true);
    }
    if (r % 2 == 1) {
        m.set(r - 1, r - 1, true);
    } else if (eta) {
        m.set(r - 2, r - 2, true);
        m.set(r - 1, r - 1, true);
    }
    return m;
}

}  // namespace hypersre
