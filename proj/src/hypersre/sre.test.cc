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

#include "hypersre/sre.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "hypersre/errors.h"
#include "hypersre/oracle.h"

using namespace hypersre;

namespace {

Hypergraph3 random_hypergraph(size_t n, size_t edges, std::mt19937_64 &rng) {
    Hypergraph3 h(n);
    for (size_t e = 0; e < edges; e++) {
        uint32_t a = rng() % n, b = rng() % n, c = rng() % n;
        if (a != b && b != c && a != c) {
            h.add_edge3(a, b, c);
        }
    }
    return h;
}

Dyadic frac(int64_t num, int64_t log2_den) {
    return Dyadic(BigInt(num), -log2_den);
}

}  // namespace

TEST(alpha, parsing) {
    EXPECT_EQ(Alpha::parse("2").value(), 2.0);
    EXPECT_EQ(Alpha::parse("1").kind(), Alpha::Kind::one);
    EXPECT_EQ(Alpha::parse("inf").kind(), Alpha::Kind::infinity);
    EXPECT_EQ(Alpha::parse("2.5").twice_integral(), 5);
    EXPECT_FALSE(Alpha::parse("2.7").twice_integral());
    EXPECT_EQ(Alpha::parse("0.5").str(), "0.5");
    EXPECT_THROW(Alpha::parse("-1"), std::invalid_argument);
    EXPECT_THROW(Alpha::parse("two"), std::invalid_argument);
    EXPECT_THROW(Alpha::parse("0"), std::invalid_argument);
}

TEST(exact_pl_moment, examples) {
    auto m3 = exact_pl_moment(chain(3), Alpha::finite(2));
    ASSERT_TRUE(m3.exact);
    EXPECT_EQ(*m3.exact, frac(11, 5));
    EXPECT_EQ(m3.value, 11.0 / 32.0);

    for (double a : {0.5, 2.0, 3.0, 2.7}) {
        auto empty = exact_pl_moment(Hypergraph3(5), Alpha::finite(a));
        EXPECT_EQ(empty.value, 1.0);
    }

    auto m4 = exact_pl_moment(chain(4), Alpha::finite(2));
    EXPECT_EQ(*m4.exact, frac(11, 5));
    EXPECT_EQ(*m4.exact, *brute_pl_moment(chain(4), Alpha::finite(2)).exact);

    EXPECT_THROW(exact_pl_moment(chain(3), Alpha::one()), ContractViolation);
    EXPECT_THROW(exact_pl_moment(chain(3), Alpha::infinity()), ContractViolation);
}

TEST(exact_pl_moment, capacity_error_names_flag) {
    EnumerationOptions opts;
    opts.max_qubits = 10;
    try {
        exact_pl_moment(chain(11), Alpha::finite(2), opts);
        FAIL();
    } catch (const CapacityError &e) {
        EXPECT_EQ(e.flag, "--max-n");
        EXPECT_NE(std::string(e.what()).find("--max-n"), std::string::npos);
    }
    EXPECT_NO_THROW(exact_pl_moment(chain(10), Alpha::finite(2), opts));
}

TEST(exact_pl_moment, matches_oracle_on_random_hypergraphs) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 3 + rng() % 5;
        auto h = random_hypergraph(n, 1 + rng() % 10, rng);
        for (double a : {2.0, 3.0, 1.5}) {
            auto fast = exact_pl_moment(h, Alpha::finite(a));
            auto brute = brute_pl_moment(h, Alpha::finite(a));
            ASSERT_TRUE(fast.exact && brute.exact);
            ASSERT_EQ(*fast.exact, *brute.exact);
        }
        for (double a : {2.7, 0.3}) {
            auto fast = exact_pl_moment(h, Alpha::finite(a));
            auto brute = brute_pl_moment(h, Alpha::finite(a));
            ASSERT_NEAR(fast.value, brute.value, 1e-10 * brute.value);
        }
    }
}

TEST(exact_pl_moment, independent_of_thread_count) {
    auto h = union_jack(2);
    h.add_edge3(0, 3, 5);
    EnumerationOptions one, many;
    one.threads = 1;
    many.threads = 5;
    auto a = rank_histogram(h, {}, one);
    auto b = rank_histogram(h, {}, many);
    EXPECT_EQ(a.counts, b.counts);
    auto big = triangular(4);
    EXPECT_EQ(rank_histogram(big, {}, one).counts, rank_histogram(big, {}, many).counts);
}

TEST(exact_pl_moment, generic_path_agrees_with_packed_path) {
    // 70 qubits forces multi-word rows; pin all but 12 bits.
    std::mt19937_64 rng(42);
    auto h = random_hypergraph(70, 120, rng);
    std::vector<FixedBit> fixed;
    for (size_t i = 12; i < 70; i++) {
        fixed.push_back({i, static_cast<bool>(rng() & 1)});
    }
    auto hist = rank_histogram(h, fixed);
    EXPECT_EQ(hist.free_bits, 12u);
    std::vector<uint64_t> expected(36, 0);
    for (uint64_t t = 0; t < 4096; t++) {
        BitString x(70, 0);
        for (size_t i = 0; i < 12; i++) {
            x[i] = (t >> i) & 1;
        }
        for (const auto &f : fixed) {
            x[f.index] = f.value;
        }
        expected[rank(symmetrize_upper(c_matrix(h, x))) / 2]++;
    }
    EXPECT_EQ(hist.counts, expected);
}

TEST(sre, examples) {
    auto r2 = sre(chain(3), Alpha::finite(2));
    EXPECT_EQ(r2.method, Method::exact);
    EXPECT_NEAR(r2.sre, std::log2(32.0 / 11.0), 1e-14);
    EXPECT_NEAR(r2.sre, 1.5406, 5e-5);

    auto inf = sre(union_jack(3), Alpha::infinity());
    EXPECT_EQ(inf.sre, 0.0);
    EXPECT_FALSE(inf.pl_moment);

    auto one = sre(chain(3), Alpha::one());
    ASSERT_TRUE(one.sre_exact);
    EXPECT_EQ(*one.sre_exact, frac(7, 2));
    EXPECT_EQ(one.sre, 1.75);
}

TEST(sre, faithfulness) {
    std::mt19937_64 rng(43);
    Hypergraph3 graph_state(6);
    for (uint32_t i = 0; i + 1 < 6; i++) {
        graph_state.add_edge2(i, i + 1);
    }
    for (const auto &a : {Alpha::one(), Alpha::finite(2), Alpha::finite(3)}) {
        EXPECT_EQ(sre(Hypergraph3(4), a).sre, 0.0);
        EXPECT_EQ(sre(graph_state, a).sre, 0.0);
    }
    for (int trial = 0; trial < 30; trial++) {
        auto h = random_hypergraph(3 + rng() % 8, 1 + rng() % 8, rng);
        if (h.edges3().empty()) {
            continue;
        }
        EXPECT_GT(sre(h, Alpha::finite(2)).sre, 0.0);
        EXPECT_GT(sre(h, Alpha::one()).sre, 0.0);
    }
}

TEST(sre, clifford_edges_change_nothing) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 4 + rng() % 8;
        auto h = random_hypergraph(n, 2 + rng() % 10, rng);
        auto decorated = h;
        for (int e = 0; e < 5; e++) {
            uint32_t a = rng() % n, b = rng() % n;
            if (a != b) {
                decorated.add_edge2(a, b);
            }
            decorated.add_edge1(b);
        }
        for (const auto &a : {Alpha::one(), Alpha::finite(2), Alpha::finite(2.5), Alpha::infinity()}) {
            EXPECT_EQ(sre(h, a).sre, sre(decorated, a).sre);
        }
        EXPECT_EQ(mc_sre(h, Alpha::finite(2), 64, 9).mean, mc_sre(decorated, Alpha::finite(2), 64, 9).mean);
    }
}

TEST(sre, non_increasing_in_alpha) {
    std::mt19937_64 rng(45);
    std::vector<Hypergraph3> corpus = {chain(6), union_jack(2), triangular(3)};
    for (int i = 0; i < 20; i++) {
        corpus.push_back(random_hypergraph(4 + rng() % 8, 1 + rng() % 12, rng));
    }
    for (const auto &h : corpus) {
        double previous = sre(h, Alpha::one()).sre;
        for (const auto &a : {Alpha::finite(2), Alpha::finite(3), Alpha::finite(4), Alpha::infinity()}) {
            double current = sre(h, a).sre;
            EXPECT_LE(current, previous + 1e-12);
            previous = current;
        }
    }
}

TEST(mc_sre, constant_estimator_on_stabilizer_state) {
    auto est = mc_sre(Hypergraph3(5), Alpha::finite(2), 100, 1234);
    EXPECT_EQ(est.mean, 1.0);
    EXPECT_EQ(est.std_error, 0.0);
    EXPECT_EQ(est.sre_point, 0.0);
    EXPECT_EQ(est.samples, 100u);
    EXPECT_EQ(est.seed, 1234u);
}

TEST(mc_sre, within_error_of_exact) {
    auto h = chain(12);
    double exact = exact_pl_moment(h, Alpha::finite(2)).value;
    auto est = mc_sre(h, Alpha::finite(2), 256, 0);
    EXPECT_GT(est.std_error, 0.0);
    EXPECT_LE(std::abs(est.mean - exact), 3 * est.std_error);
}

TEST(mc_sre, averaged_estimates_are_unbiased) {
    auto h = chain(10);
    double exact = exact_pl_moment(h, Alpha::finite(2)).value;
    double sum = 0, var = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        auto est = mc_sre(h, Alpha::finite(2), 64, seed);
        sum += est.mean;
        var += est.std_error * est.std_error;
    }
    double combined = std::sqrt(var) / 100;
    EXPECT_LE(std::abs(sum / 100 - exact), 4 * combined);
}

TEST(mc_sre, reproducible_and_thread_independent) {
    auto h = union_jack(3);
    EnumerationOptions one, many;
    one.threads = 1;
    many.threads = 4;
    auto a = mc_sre(h, Alpha::finite(2), 300, 77, one);
    auto b = mc_sre(h, Alpha::finite(2), 300, 77, many);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.mean, mc_sre(h, Alpha::finite(2), 300, 78, one).mean);
    EXPECT_EQ(mc_sample_bits(10, 5, 3), mc_sample_bits(10, 5, 3));
    EXPECT_NE(mc_sample_bits(64, 5, 3), mc_sample_bits(64, 5, 4));
}

TEST(mc_sre, rejects_bad_arguments) {
    EXPECT_THROW(mc_sre(chain(3), Alpha::finite(2), 1, 0), ContractViolation);
    EXPECT_THROW(mc_sre(chain(3), Alpha::one(), 10, 0), ContractViolation);
}

TEST(bounds, examples) {
    auto t4 = triangular(4);
    EXPECT_NEAR(upper_bound(t4, Alpha::finite(2), BoundVariant::jensen), 16 * (1 - std::log2(17.0 / 16.0)), 1e-12);
    EXPECT_NEAR(upper_bound(t4, Alpha::finite(2), BoundVariant::jensen), 14.60, 5e-3);
    EXPECT_NEAR(prev_upper_bound(t4, Alpha::finite(2)), 16 * (1 - std::log2(1 + std::exp2(-18))), 1e-12);
    EXPECT_EQ(upper_bound(Hypergraph3(6), Alpha::finite(2), BoundVariant::per_vertex), 0.0);
    EXPECT_EQ(upper_bound(Hypergraph3(6), Alpha::finite(2), BoundVariant::jensen), 0.0);
    EXPECT_EQ(prev_upper_bound(Hypergraph3(6), Alpha::finite(3)), 0.0);
    EXPECT_THROW(upper_bound(t4, Alpha::finite(1.0), BoundVariant::jensen), ContractViolation);
    EXPECT_THROW(upper_bound(t4, Alpha::finite(0.5), BoundVariant::per_vertex), ContractViolation);
    EXPECT_THROW(prev_upper_bound(t4, Alpha::one()), ContractViolation);
}

TEST(bounds, ordering_on_random_hypergraphs) {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 30; trial++) {
        auto h = random_hypergraph(4 + rng() % 9, 1 + rng() % 15, rng);
        for (double a : {2.0, 3.0, 2.5}) {
            Alpha alpha = Alpha::finite(a);
            double exact = sre(h, alpha).sre;
            double per_vertex = upper_bound(h, alpha, BoundVariant::per_vertex);
            double jensen = upper_bound(h, alpha, BoundVariant::jensen);
            double prev = prev_upper_bound(h, alpha);
            EXPECT_LE(exact, per_vertex + 1e-12);
            EXPECT_LE(per_vertex, jensen + 1e-12);
            EXPECT_LE(per_vertex, prev + 1e-12);
        }
    }
}
