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

#ifndef HYPERSRE_VERIFY_H
#define HYPERSRE_VERIFY_H

#include <functional>
#include <string>
#include <vector>

#include "hypersre/hypergraph.h"
#include "hypersre/sre.h"

namespace hypersre {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    size_t n = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

using MomentFn = std::function<PlMoment(const Hypergraph3 &, const Alpha &)>;

struct VerifyOptions {
    std::vector<Alpha> alphas = {Alpha::finite(2), Alpha::finite(3)};
    /// Fast path under test; defaults to exact_pl_moment.
    MomentFn fast_moment;
};

/// Cross-checks the rank formula against the brute-force oracle on a small
/// hypergraph (at most kPauliSumCap qubits):
///   statevector_norm          amplitudes are +-2^{-n/2}, norm 1
///   expectation_formula       phase-polynomial sum == |<psi|P|psi>| for all P
///   nonzero_pattern           for each x, 2^{2h(x)} nonzero z, each 2^{-h(x)}
///   moment_alpha_<a>          brute-force moment == fast moment
///   clifford_edge_invariance  dropping CZ/Z edges leaves the moment unchanged
VerificationReport verify_hypergraph(const Hypergraph3 &h, const VerifyOptions &options = {});

}  // namespace hypersre

#endif
