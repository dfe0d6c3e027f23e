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

#include <random>

#include "gtest/gtest.h"
#include "hypersre/errors.h"

using namespace hypersre;

namespace {

BitMatrix random_strictly_upper(size_t n, std::mt19937_64 &rng, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    BitMatrix m(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r + 1; c < n; c++) {
            m.set(r, c, coin(rng));
        }
    }
    return m;
}

// Q(P a') == standard(a') for every a'.
void expect_standard_form_holds(const BitMatrix &c, const StandardForm &form) {
    const size_t n = c.num_rows();
    ASSERT_LE(n, 20u);
    for (uint64_t a_prime = 0; a_prime < (uint64_t{1} << n); a_prime++) {
        uint64_t a = 0;
        for (size_t col = 0; col < n; col++) {
            if ((a_prime >> col) & 1) {
                for (size_t row = 0; row < n; row++) {
                    a ^= uint64_t{form.p.get(row, col)} << row;
                }
            }
        }
        BitWords av{a}, apv{a_prime};
        ASSERT_EQ(evaluate_form(c, av), evaluate_standard(form, apv)) << c.str() << "a'=" << a_prime;
    }
}

}  // namespace

TEST(quadform, zero_form) {
    auto form = standardize(BitMatrix(4, 4));
    EXPECT_EQ(form.r, 0u);
    EXPECT_EQ(form.pairs, 0u);
    EXPECT_FALSE(form.eta);
    EXPECT_EQ(form.p, BitMatrix::identity(4));
}

TEST(quadform, single_product_is_already_standard) {
    auto c = BitMatrix::from_strings({"01", "00"});
    auto form = standardize(c);
    EXPECT_EQ(form.r, 2u);
    EXPECT_FALSE(form.eta);
    EXPECT_EQ(form.pairs, 1u);
    expect_standard_form_holds(c, form);
}

TEST(quadform, single_ccz_generator_form) {
    // a0 a1 + a0 a2 + a1 a2: one product pair plus a lone linear variable.
    auto c = BitMatrix::from_strings({"011", "001", "000"});
    auto form = standardize(c);
    EXPECT_EQ(form.pairs, 1u);
    EXPECT_EQ(form.r, 3u);
    EXPECT_EQ(rank(symmetrize_upper(c)), 2u);
    expect_standard_form_holds(c, form);
}

TEST(quadform, eta_one_occurs) {
    // a0 a1 + a0 a2 + a1 a2 + a2 a3 style forms: search a small family and
    // require at least one eta = 1 result, each verified exhaustively.
    std::mt19937_64 rng(21);
    int eta_seen = 0;
    for (int trial = 0; trial < 400; trial++) {
        auto c = random_strictly_upper(2 + rng() % 7, rng);
        auto form = standardize(c);
        expect_standard_form_holds(c, form);
        if (form.eta) {
            eta_seen++;
            auto again = standardize(c);
            EXPECT_EQ(again.p, form.p);
            EXPECT_TRUE(again.eta);
        }
    }
    EXPECT_GT(eta_seen, 0);
}

TEST(quadform, invariants_on_random_forms) {
    std::mt19937_64 rng(22);
    for (size_t n = 1; n <= 10; n++) {
        for (int trial = 0; trial < 60; trial++) {
            auto c = random_strictly_upper(n, rng, trial % 3 == 0 ? 0.15 : 0.5);
            auto form = standardize(c);
            ASSERT_TRUE(is_invertible(form.p));
            ASSERT_LE(form.r, n);
            if (form.r % 2 == 1) {
                ASSERT_FALSE(form.eta);
                ASSERT_EQ(form.pairs, (form.r - 1) / 2);
            } else {
                ASSERT_EQ(form.pairs, form.r / 2);
            }
            ASSERT_EQ(2 * form.pairs, rank(symmetrize_upper(c)));
            expect_standard_form_holds(c, form);
        }
    }
}

TEST(quadform, congruence_gives_block_matrix) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 40;
        auto c = random_strictly_upper(n, rng, 0.3);
        auto form = standardize(c);
        ASSERT_EQ(congruent_upper(c, form.p), standard_matrix(n, form.r, form.eta));
        // The folded lower part cancels in the polar form.
        auto tilde = congruent_upper(c, form.p);
        ASSERT_EQ(tilde ^ transpose(tilde),
            multiply(multiply(transpose(form.p), symmetrize_upper(c)), form.p));
    }
}

TEST(quadform, rank_relation_examples) {
    auto zero = rank_relation(BitMatrix(5, 5));
    EXPECT_EQ(zero.two_h, 0u);
    EXPECT_EQ(zero.r, 0u);
    auto one = rank_relation(BitMatrix::from_strings({"01", "00"}));
    EXPECT_EQ(one.two_h, 2u);
    EXPECT_EQ(one.r, 2u);

    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; trial++) {
        auto rel = rank_relation(random_strictly_upper(10, rng));
        EXPECT_EQ(rel.two_h, rel.r - rel.r % 2);
    }
}

TEST(quadform, rejects_non_upper_input) {
    EXPECT_THROW(standardize(BitMatrix(2, 3)), ContractViolation);
    EXPECT_THROW(standardize(BitMatrix::identity(3)), ContractViolation);
    EXPECT_THROW(rank_relation(BitMatrix::from_strings({"00", "10"})), ContractViolation);
}
