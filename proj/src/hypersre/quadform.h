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

#ifndef HYPERSRE_QUADFORM_H
#define HYPERSRE_QUADFORM_H

#include <cstddef>
#include <span>

#include "hypersre/gf2.h"

namespace hypersre {

/// Canonical form of the GF(2) quadratic form Q(a) = a^T C a.
///
/// With a = P a', Q becomes
///   a'_0 a'_1 + ... + a'_{r-3} a'_{r-2} + a'_{r-1}                  (r odd)
///   a'_0 a'_1 + ... + a'_{r-2} a'_{r-1} + eta (a'_{r-2} + a'_{r-1})  (r even)
/// and does not depend on a'_r, ..., a'_{N-1}.
struct StandardForm {
    BitMatrix p;
    size_t r = 0;
    bool eta = false;
    /// Number of a'_{2i} a'_{2i+1} products; equals rank(C + C^T) / 2.
    size_t pairs = 0;
};

/// Reduces a square, strictly upper-triangular C to standard form.
///
/// Works on the alternating polar form B = C + C^T: a symplectic
/// Gram-Schmidt pass (lowest index first) splits the space into hyperbolic
/// pairs plus the radical of B, then the values of Q on the new basis
/// vectors decide between r = 2h + 1 (Q nonzero on the radical) and
/// r = 2h with the Arf-type bit eta.
StandardForm standardize(const BitMatrix &c);

struct RankRelation {
    size_t two_h = 0;
    size_t r = 0;
};

/// two_h = rank(C + C^T) and r from standardize(C). Throws std::logic_error if
/// two_h != r - (r mod 2), which would mean one of the two routes is broken.
RankRelation rank_relation(const BitMatrix &c);

/// a^T C a over GF(2), counting the diagonal of C as linear terms.
/// `a` is packed like a BitMatrix row.
bool evaluate_form(const BitMatrix &c, std::span<const uint64_t> a);

/// The standard-form polynomial evaluated at a'.
bool evaluate_standard(const StandardForm &form, std::span<const uint64_t> a_prime);

/// Upper-triangular representative of P^T C P: the entries below the
/// diagonal are folded onto their mirror, which leaves the form unchanged.
BitMatrix congruent_upper(const BitMatrix &c, const BitMatrix &p);

/// The block-diagonal upper-triangular matrix of the standard form in N
/// variables with parameters (r, eta).
BitMatrix standard_matrix(size_t n, size_t r, bool eta);

}  // namespace hypersre

#endif
