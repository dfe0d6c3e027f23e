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

#ifndef HYPERSRE_ORACLE_H
#define HYPERSRE_ORACLE_H

#include <cstdint>
#include <vector>

#include "hypersre/hypergraph.h"
#include "hypersre/sre.h"

namespace hypersre {

// Brute-force reference implementations. Everything here follows the
// definitions directly (amplitudes, Pauli strings, the full 4^n sum) and
// shares no code with the rank-based fast path beyond the hypergraph type.

inline constexpr size_t kStatevectorCap = 14;
inline constexpr size_t kPauliSumCap = 8;

/// Pauli string i^{x.z} X^x Z^z; bit q of `x`/`z` acts on qubit q.
struct PauliLabel {
    size_t n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
};

/// Hypergraph state amplitudes. Every amplitude is sign * 2^{-n/2}.
struct StateVector {
    size_t n = 0;
    std::vector<int8_t> signs;

    double amplitude(uint64_t basis) const;
    double norm_squared() const;
};

StateVector statevector(const Hypergraph3 &h);

/// <psi| X^x Z^z |psi> * 2^n as an exact integer (before the i^{x.z} phase).
int64_t raw_expectation_sum(const StateVector &psi, const PauliLabel &p);

/// <psi|P|psi> including the i^{x.z} phase. Throws std::logic_error if the
/// result has a nonzero imaginary part.
double pauli_expectation(const StateVector &psi, const PauliLabel &p);

/// |sum_a (-1)^{phase(a)}| with the phase polynomial of the generalized
/// stabilizer S^x: per hyperedge, a_i x_j x_k + a_i a_j x_k over the three
/// vertex roles, plus z.a and the linear terms of any CZ edges.
int64_t phase_sum_abs(const Hypergraph3 &h, const PauliLabel &p);
/// phase_sum_abs / 2^n.
double phase_sum_expectation(const Hypergraph3 &h, const PauliLabel &p);

/// m_alpha straight from its definition, summing |<P>|^{2 alpha} over all
/// 4^n Pauli strings and dividing by 2^n. Exact when 2 alpha is an integer.
PlMoment brute_pl_moment(const Hypergraph3 &h, const Alpha &alpha);

/// Every raw_expectation_sum, indexed [x * 2^n + z].
std::vector<int64_t> pauli_spectrum(const Hypergraph3 &h);

}  // namespace hypersre

#endif
