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

#ifndef HYPERSRE_CHAIN_H
#define HYPERSRE_CHAIN_H

#include <array>
#include <string>
#include <vector>

#include "hypersre/dyadic.h"
#include "hypersre/sre.h"

namespace hypersre {

// Exact moments of the open triangle chain (0,1,2), (1,2,3), ... by an
// eight-component linear recursion. Notation: m^(N)_(y0,y1) is the moment
// of the N-qubit chain averaged only over x with x_0 = y0, x_1 = y1.

/// State vector of the chain recursion at size n:
///   [ m^(n)_(0,0), m^(n)_(0,1), m^(n)_(1),
///     m^(n-1)_(0,0), m^(n-1)_(0,1), m^(n-1)_(1),
///     m^(n-2)_(0), m^(n-2)_(1) ] * 2^scale_exp
/// beta = 2^(2 (1 - alpha)) is the weight of one isolated CZ pair.
template <typename T>
struct BasicChainState {
    size_t n = 0;
    std::array<T, 8> entries{};
    T beta{};
    /// Power-of-two rescaling that keeps double entries away from underflow.
    /// Always 0 for exact states.
    int64_t scale_exp = 0;
};

using ChainState = BasicChainState<Dyadic>;
using FloatChainState = BasicChainState<double>;

/// One step of the recursion: state at n -> state at n + 1.
ChainState advance(const ChainState &state);
FloatChainState advance(const FloatChainState &state);

/// Moment of chain(n) with the listed x bits pinned, by enumeration over the
/// remaining bits.
PlMoment fixed_moment(
    size_t n, const Alpha &alpha, const std::vector<FixedBit> &fixed, const EnumerationOptions &options = {});

/// Recursion seed at n = 5, every entry from direct enumeration. Exact
/// states need 2 alpha integral.
ChainState seed_chain_state(const Alpha &alpha, const EnumerationOptions &options = {});
FloatChainState seed_float_chain_state(const Alpha &alpha, const EnumerationOptions &options = {});

struct ChainOptions {
    EnumerationOptions enumeration;
    /// Exact states switch to floating point past this size.
    size_t exact_up_to = 512;
    /// chain_pl_moment re-derives the moment by enumeration up to this n and
    /// throws std::logic_error on disagreement. 0 disables the check.
    size_t cross_check_up_to = 16;
};

/// m_alpha of chain(n) for n >= 3, finite alpha != 1.
PlMoment chain_pl_moment(size_t n, const Alpha &alpha, const ChainOptions &options = {});

/// M_alpha of chain(n) via the recursion; stays finite where the moment
/// itself would underflow a double.
SreResult chain_sre(size_t n, const Alpha &alpha, const ChainOptions &options = {});

/// log2 m_alpha for n = 2 .. n_max, index n - 2. chain(2) has no
/// hyperedge, so its moment is 1.
std::vector<double> chain_log2_moments(size_t n_max, const Alpha &alpha, const ChainOptions &options = {});

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Large-n line M_alpha(n) ~ slope * n + intercept: slope is the first
/// difference at n_hi, intercept M(n_hi) - slope * n_hi. Throws
/// ConvergenceError when the first differences at n_lo and n_hi differ by
/// more than 1e-6.
LinearFit asymptotic_fit(const Alpha &alpha, size_t n_lo = 150, size_t n_hi = 200, const ChainOptions &options = {});

/// The 8x8 recursion matrix for alpha, row-major.
std::array<std::array<double, 8>, 8> transfer_matrix(const Alpha &alpha);

/// Largest eigenvalue of transfer_matrix(alpha) by power iteration.
double dominant_eigenvalue(const Alpha &alpha);

/// A printed seed value compared against enumeration.
struct InitialConditionCheck {
    std::string name;
    PlMoment expected;
    PlMoment actual;
    bool matches = false;
};

/// m^(3)_(0,0) = (1+b)/2, m^(3)_(0,1) = b, m^(3)_(1) = b,
/// m^(4)_(0,0) = (1+3b)/4, m^(4)_(0,1) = b, m^(4)_(1) = (1+7b)/8.
std::vector<InitialConditionCheck> initial_condition_checks(
    const Alpha &alpha, const EnumerationOptions &options = {});

}  // namespace hypersre

#endif
