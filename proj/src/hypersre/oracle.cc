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

#include "hypersre/oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "hypersre/errors.h"

namespace hypersre {

namespace {

void check_cap(const Hypergraph3 &h, size_t cap, const char *what) {
    if (h.num_qubits() > cap) {
        throw CapacityError(
            std::string(what) + " supports at most " + std::to_string(cap) + " qubits, got " +
            std::to_string(h.num_qubits()));
    }
}

bool bit(uint64_t v, size_t i) {
    return (v >> i) & 1;
}

int parity(uint64_t v) {
    return std::popcount(v) & 1;
}

}  // namespace

double StateVector::amplitude(uint64_t basis) const {
    return signs[basis] * std::exp2(-0.5 * static_cast<double>(n));
}

double StateVector::norm_squared() const {
    double acc = 0;
    for (uint64_t a = 0; a < signs.size(); a++) {
        double amp = amplitude(a);
        acc += amp * amp;
    }
    return acc;
}

StateVector statevector(const Hypergraph3 &h) {
    check_cap(h, kStatevectorCap, "statevector");
    StateVector psi;
    psi.n = h.num_qubits();
    psi.signs.assign(uint64_t{1} << psi.n, 1);
    for (uint64_t a = 0; a < psi.signs.size(); a++) {
        int phase = 0;
        for (const auto &[i, j, k] : h.edges3()) {
            phase ^= bit(a, i) & bit(a, j) & bit(a, k);
        }
        for (const auto &[i, j] : h.edges2()) {
            phase ^= bit(a, i) & bit(a, j);
        }
        for (uint32_t i : h.edges1()) {
            phase ^= bit(a, i);
        }
        psi.signs[a] = phase ? -1 : 1;
    }
    return psi;
}

int64_t raw_expectation_sum(const StateVector &psi, const PauliLabel &p) {
    if (p.n != psi.n) {
        throw ContractViolation("Pauli string acts on " + std::to_string(p.n) + " qubits, state has " + std::to_string(psi.n));
    }
    // X^x Z^z |a> = (-1)^{z.a} |a ^ x>.
    int64_t acc = 0;
    for (uint64_t a = 0; a < psi.signs.size(); a++) {
        int term = psi.signs[a ^ p.x] * psi.signs[a];
        acc += parity(p.z & a) ? -term : term;
    }
    return acc;
}

double pauli_expectation(const StateVector &psi, const PauliLabel &p) {
    int64_t raw = raw_expectation_sum(psi, p);
    int quarter_turns = std::popcount(p.x & p.z) % 4;
    if (quarter_turns % 2 == 1 && raw != 0) {
        throw std::logic_error("Pauli expectation has a nonzero imaginary part");
    }
    double sign = quarter_turns == 2 ? -1.0 : 1.0;
    return sign * std::ldexp(static_cast<double>(raw), -static_cast<int>(psi.n));
}

int64_t phase_sum_abs(const Hypergraph3 &h, const PauliLabel &p) {
    check_cap(h, kStatevectorCap, "phase_sum_expectation");
    if (p.n != h.num_qubits()) {
        throw ContractViolation("Pauli string size does not match the hypergraph");
    }
    const uint64_t x = p.x;
    int64_t acc = 0;
    for (uint64_t a = 0; a < (uint64_t{1} << h.num_qubits()); a++) {
        int phase = parity(p.z & a);
        for (const auto &[i, j, k] : h.edges3()) {
            // Z factors: a_i x_j x_k for each vertex role.
            phase ^= bit(a, i) & bit(x, j) & bit(x, k);
            phase ^= bit(a, j) & bit(x, i) & bit(x, k);
            phase ^= bit(a, k) & bit(x, i) & bit(x, j);
            // CZ factors: a_i a_j x_k for each vertex role.
            phase ^= bit(a, i) & bit(a, j) & bit(x, k);
            phase ^= bit(a, i) & bit(a, k) & bit(x, j);
            phase ^= bit(a, j) & bit(a, k) & bit(x, i);
        }
        for (const auto &[i, j] : h.edges2()) {
            phase ^= bit(a, i) & bit(x, j);
            phase ^= bit(a, j) & bit(x, i);
        }
        acc += phase ? -1 : 1;
    }
    return acc < 0 ? -acc : acc;
}

double phase_sum_expectation(const Hypergraph3 &h, const PauliLabel &p) {
    return std::ldexp(static_cast<double>(phase_sum_abs(h, p)), -static_cast<int>(h.num_qubits()));
}

std::vector<int64_t> pauli_spectrum(const Hypergraph3 &h) {
    check_cap(h, kPauliSumCap, "pauli_spectrum");
    const auto psi = statevector(h);
    const size_t n = h.num_qubits();
    const uint64_t dim = uint64_t{1} << n;
    std::vector<int64_t> out(dim * dim);
    for (uint64_t x = 0; x < dim; x++) {
        for (uint64_t z = 0; z < dim; z++) {
            out[x * dim + z] = raw_expectation_sum(psi, PauliLabel{n, x, z});
        }
    }
    return out;
}

PlMoment brute_pl_moment(const Hypergraph3 &h, const Alpha &alpha) {
    if (!alpha.is_finite()) {
        throw ContractViolation("brute_pl_moment needs a finite alpha other than 1");
    }
    check_cap(h, kPauliSumCap, "brute_pl_moment");
    const auto spectrum = pauli_spectrum(h);
    const auto n = static_cast<int64_t>(h.num_qubits());
    PlMoment out;
    if (auto k = alpha.twice_integral()) {
        // |S / 2^n|^{2 alpha} = |S|^k / 2^{k n}; then divide by 2^n.
        BigInt acc = 0;
        for (int64_t s : spectrum) {
            if (s != 0) {
                acc += boost::multiprecision::pow(BigInt(s < 0 ? -s : s), static_cast<unsigned>(*k));
            }
        }
        out.exact = Dyadic(acc, -(*k) * n - n);
        out.value = out.exact->to_double();
        return out;
    }
    double acc = 0;
    for (int64_t s : spectrum) {
        if (s != 0) {
            acc += std::pow(std::ldexp(std::abs(static_cast<double>(s)), -static_cast<int>(n)), 2 * alpha.value());
        }
    }
    out.value = std::ldexp(acc, -static_cast<int>(n));
    return out;
}

}  // namespace hypersre
