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

#include "hypersre/verify.h"

#include <cmath>
#include <sstream>

#include "hypersre/errors.h"
#include "hypersre/oracle.h"

namespace hypersre {

bool VerificationReport::all_passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

namespace {

bool same_moment(const PlMoment &a, const PlMoment &b) {
    if (a.exact && b.exact) {
        return *a.exact == *b.exact;
    }
    return std::abs(a.value - b.value) <= 1e-10 * std::abs(b.value);
}

std::string describe(const PlMoment &m) {
    return m.exact ? m.exact->fraction_string() : std::to_string(m.value);
}

}  // namespace

VerificationReport verify_hypergraph(const Hypergraph3 &h, const VerifyOptions &options) {
    if (h.num_qubits() > kPauliSumCap) {
        throw CapacityError(
            "verify supports at most " + std::to_string(kPauliSumCap) + " qubits, got " +
            std::to_string(h.num_qubits()));
    }
    MomentFn fast = options.fast_moment ? options.fast_moment
                                        : MomentFn([](const Hypergraph3 &g, const Alpha &a) { return exact_pl_moment(g, a); });
    const size_t n = h.num_qubits();
    const uint64_t dim = uint64_t{1} << n;
    VerificationReport report;
    report.n = n;

    {
        auto psi = statevector(h);
        CheckResult c{"statevector_norm", true, ""};
        double err = std::abs(psi.norm_squared() - 1);
        for (int8_t s : psi.signs) {
            c.passed &= s == 1 || s == -1;
        }
        c.passed &= err <= 1e-12;
        c.detail = "|norm^2 - 1| = " + std::to_string(err);
        report.checks.push_back(c);
    }

    const auto spectrum = pauli_spectrum(h);

    {
        CheckResult c{"expectation_formula", true, ""};
        const auto psi = statevector(h);
        size_t mismatches = 0;
        for (uint64_t x = 0; x < dim; x++) {
            for (uint64_t z = 0; z < dim; z++) {
                PauliLabel p{n, x, z};
                int64_t raw = spectrum[x * dim + z];
                bool ok = phase_sum_abs(h, p) == (raw < 0 ? -raw : raw);
                try {
                    double full = pauli_expectation(psi, p);
                    ok &= std::abs(std::abs(full) - phase_sum_expectation(h, p)) <= 1e-12;
                } catch (const std::logic_error &) {
                    ok = false;
                }
                mismatches += ok ? 0 : 1;
            }
        }
        c.passed = mismatches == 0;
        c.detail = std::to_string(mismatches) + " mismatching Pauli strings of " + std::to_string(dim * dim);
        report.checks.push_back(c);
    }

    {
        CheckResult c{"nonzero_pattern", true, ""};
        size_t bad_x = 0;
        for (uint64_t x = 0; x < dim; x++) {
            BitString bits(n);
            for (size_t i = 0; i < n; i++) {
                bits[i] = (x >> i) & 1;
            }
            size_t two_h = rank(symmetrize_upper(c_matrix(h, bits)));
            size_t nonzero = 0;
            bool magnitudes_ok = true;
            for (uint64_t z = 0; z < dim; z++) {
                int64_t raw = spectrum[x * dim + z];
                if (raw != 0) {
                    nonzero++;
                    // |S| / 2^n == 2^{-h}  <=>  |S| == 2^{n - h}
                    magnitudes_ok &= (raw < 0 ? -raw : raw) == (int64_t{1} << (n - two_h / 2));
                }
            }
            if (nonzero != (uint64_t{1} << two_h) || !magnitudes_ok) {
                bad_x++;
            }
        }
        c.passed = bad_x == 0;
        c.detail = std::to_string(bad_x) + " of " + std::to_string(dim) + " x strings violate the pattern";
        report.checks.push_back(c);
    }

    for (const auto &alpha : options.alphas) {
        CheckResult c{"moment_alpha_" + alpha.str(), false, ""};
        auto brute = brute_pl_moment(h, alpha);
        auto quick = fast(h, alpha);
        c.passed = same_moment(brute, quick);
        c.detail = "brute " + describe(brute) + " vs rank formula " + describe(quick);
        report.checks.push_back(c);
    }

    {
        CheckResult c{"clifford_edge_invariance", true, ""};
        Hypergraph3 stripped(n);
        for (const auto &[i, j, k] : h.edges3()) {
            stripped.add_edge3(i, j, k);
        }
        for (const auto &alpha : options.alphas) {
            auto with_edges = brute_pl_moment(h, alpha);
            auto without = fast(stripped, alpha);
            c.passed &= same_moment(with_edges, without);
        }
        c.detail = std::to_string(h.edges2().size()) + " CZ and " + std::to_string(h.edges1().size()) + " Z edges";
        report.checks.push_back(c);
    }
    return report;
}

}  // namespace hypersre
