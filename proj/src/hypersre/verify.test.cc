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

#include <random>

#include "gtest/gtest.h"
#include "hypersre/errors.h"
#include "hypersre/oracle.h"

using namespace hypersre;

TEST(verify_hypergraph, passes_on_lattices_and_random_inputs) {
    std::vector<Hypergraph3> corpus = {chain(3), chain(8), union_jack(2), Hypergraph3(4)};
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; trial++) {
        size_t n = 3 + rng() % 5;
        Hypergraph3 h(n);
        for (int e = 0; e < 8; e++) {
            uint32_t a = rng() % n, b = rng() % n, c = rng() % n;
            if (a != b && b != c && a != c) {
                h.add_edge3(a, b, c);
            }
            if (a != b) {
                h.add_edge2(a, b);
            }
            h.add_edge1(a);
        }
        corpus.push_back(h);
    }
    for (const auto &h : corpus) {
        auto report = verify_hypergraph(h);
        EXPECT_TRUE(report.all_passed());
        EXPECT_EQ(report.checks.size(), 6u);
        for (const auto &c : report.checks) {
            EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        }
    }
}

TEST(verify_hypergraph, detects_a_wrong_fast_path) {
    VerifyOptions opts;
    opts.fast_moment = [](const Hypergraph3 &h, const Alpha &a) {
        auto m = exact_pl_moment(h, a);
        m.exact = *m.exact + Dyadic::pow2(-40);
        m.value = m.exact->to_double();
        return m;
    };
    auto report = verify_hypergraph(chain(4), opts);
    EXPECT_FALSE(report.all_passed());
    bool moment_failed = false;
    for (const auto &c : report.checks) {
        if (c.name == "moment_alpha_2") {
            moment_failed = !c.passed;
        }
    }
    EXPECT_TRUE(moment_failed);
}

TEST(verify_hypergraph, size_cap) {
    EXPECT_THROW(verify_hypergraph(chain(kPauliSumCap + 1)), CapacityError);
}
