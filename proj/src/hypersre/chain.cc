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

#include "hypersre/chain.h"

#include <cmath>
#include <stdexcept>

#include "hypersre/errors.h"
#include "hypersre/hypergraph.h"

namespace hypersre {

namespace {

// num * 2^-shift in either arithmetic.
template <typename T>
T frac(int64_t num, int64_t shift);

template <>
Dyadic frac<Dyadic>(int64_t num, int64_t shift) {
    return Dyadic(BigInt(num), -shift);
}

template <>
double frac<double>(int64_t num, int64_t shift) {
    return std::ldexp(static_cast<double>(num), -static_cast<int>(shift));
}

Dyadic exact_beta(const Alpha &alpha) {
    auto k = alpha.twice_integral();
    if (!k) {
        throw ContractViolation("exact chain states need 2 alpha to be an integer, got alpha = " + alpha.str());
    }
    return Dyadic::pow2(2 - *k);
}

double float_beta(const Alpha &alpha) {
    return std::exp2(2 * (1 - alpha.value()));
}

void require_alpha(const Alpha &alpha) {
    if (!alpha.is_finite()) {
        throw ContractViolation("the chain recursion needs a finite alpha other than 1");
    }
}

template <typename T>
BasicChainState<T> advance_impl(const BasicChainState<T> &s) {
    const T &b = s.beta;
    const auto &m = s.entries;
    const T q = frac<T>(1, 1);  // 1/2
    // Rows of [A B] acting on (m^(n-1) triple, m^(n-2) pair) of the old state.
    BasicChainState<T> out;
    out.n = s.n + 1;
    out.beta = s.beta;
    out.scale_exp = s.scale_exp;
    const T b2 = b * frac<T>(1, 1);
    const T b4 = b * frac<T>(1, 2);
    const T b8 = b * frac<T>(1, 3);
    out.entries[0] = frac<T>(1, 2) * m[3] + b2 * m[5] + b4 * m[7];
    out.entries[1] = b2 * m[5] + b4 * m[6] + b4 * m[7];
    out.entries[2] = frac<T>(1, 3) * m[4] + b2 * m[5] + b4 * m[6] + b8 * m[7];
    out.entries[3] = m[0];
    out.entries[4] = m[1];
    out.entries[5] = m[2];
    out.entries[6] = q * m[3] + q * m[4];
    out.entries[7] = m[5];
    return out;
}

template <typename T>
T combine(const T &m00, const T &m01, const T &m1) {
    return (m00 + m01) * frac<T>(1, 2) + m1 * frac<T>(1, 1);
}

void rescale(FloatChainState &s) {
    double peak = 0;
    for (double v : s.entries) {
        peak = std::max(peak, v);
    }
    if (peak > 0 && peak < 0x1p-256) {
        for (double &v : s.entries) {
            v = std::ldexp(v, 256);
        }
        s.scale_exp -= 256;
    }
}

FloatChainState to_float(const ChainState &s) {
    FloatChainState out;
    out.n = s.n;
    out.beta = s.beta.to_double();
    double peak = -1e300;
    for (const auto &v : s.entries) {
        peak = std::max(peak, v.log2());
    }
    auto shift = static_cast<int64_t>(std::floor(peak));
    for (size_t i = 0; i < 8; i++) {
        out.entries[i] = s.entries[i].scaled(-shift).to_double();
    }
    out.scale_exp = shift;
    return out;
}

struct StateSeeds {
    // 𝓜_5 entries from enumeration.
    std::array<PlMoment, 8> entries;
};

StateSeeds seed_entries(const Alpha &alpha, const EnumerationOptions &options) {
    require_alpha(alpha);
    StateSeeds s;
    s.entries[0] = fixed_moment(5, alpha, {{0, false}, {1, false}}, options);
    s.entries[1] = fixed_moment(5, alpha, {{0, false}, {1, true}}, options);
    s.entries[2] = fixed_moment(5, alpha, {{0, true}}, options);
    s.entries[3] = fixed_moment(4, alpha, {{0, false}, {1, false}}, options);
    s.entries[4] = fixed_moment(4, alpha, {{0, false}, {1, true}}, options);
    s.entries[5] = fixed_moment(4, alpha, {{0, true}}, options);
    s.entries[6] = fixed_moment(3, alpha, {{0, false}}, options);
    s.entries[7] = fixed_moment(3, alpha, {{0, true}}, options);
    return s;
}

double log2_moment_at_n(const FloatChainState &s) {
    return std::log2(combine(s.entries[0], s.entries[1], s.entries[2])) + static_cast<double>(s.scale_exp);
}

// Runs the recursion from the n = 5 seed, calling visit(log2 m) for every
// n in [2, n_max], and returns the exact moment at n_max when still exact.
struct RecursionOutcome {
    std::optional<Dyadic> exact_last;
    double log2_last = 0.0;
};

template <typename Visit>
RecursionOutcome run_recursion(size_t n_max, const Alpha &alpha, const ChainOptions &options, Visit &&visit) {
    require_alpha(alpha);
    if (n_max < 2) {
        throw ContractViolation("chain size must be at least 2");
    }
    RecursionOutcome out;
    auto report = [&](size_t n, double log2m) {
        visit(n, log2m);
        if (n == n_max) {
            out.log2_last = log2m;
        }
    };
    report(2, 0.0);
    if (n_max == 2) {
        out.exact_last = Dyadic(1);
        return out;
    }

    if (alpha.twice_integral()) {
        ChainState s = seed_chain_state(alpha, options.enumeration);
        Dyadic m3 = (s.entries[6] + s.entries[7]) * Dyadic::pow2(-1);
        Dyadic m4 = combine(s.entries[3], s.entries[4], s.entries[5]);
        report(3, m3.log2());
        if (n_max == 3) {
            out.exact_last = m3;
            return out;
        }
        report(4, m4.log2());
        if (n_max == 4) {
            out.exact_last = m4;
            return out;
        }
        while (true) {
            Dyadic m = combine(s.entries[0], s.entries[1], s.entries[2]);
            report(s.n, m.log2());
            if (s.n == n_max) {
                out.exact_last = m;
                return out;
            }
            if (s.n >= options.exact_up_to) {
                break;
            }
            s = advance(s);
        }
        FloatChainState f = to_float(s);
        while (f.n < n_max) {
            f = advance(f);
            report(f.n, log2_moment_at_n(f));
        }
        return out;
    }

    FloatChainState f = seed_float_chain_state(alpha, options.enumeration);
    report(3, std::log2((f.entries[6] + f.entries[7]) / 2));
    if (n_max >= 4) {
        report(4, std::log2(combine(f.entries[3], f.entries[4], f.entries[5])));
    }
    if (n_max >= 5) {
        report(5, log2_moment_at_n(f));
    }
    while (f.n < n_max) {
        f = advance(f);
        report(f.n, log2_moment_at_n(f));
    }
    return out;
}

}  // namespace

ChainState advance(const ChainState &state) {
    return advance_impl(state);
}

FloatChainState advance(const FloatChainState &state) {
    auto out = advance_impl(state);
    rescale(out);
    return out;
}

PlMoment fixed_moment(size_t n, const Alpha &alpha, const std::vector<FixedBit> &fixed, const EnumerationOptions &options) {
    require_alpha(alpha);
    return moment_from_histogram(rank_histogram(chain(n), fixed, options), alpha);
}

ChainState seed_chain_state(const Alpha &alpha, const EnumerationOptions &options) {
    ChainState s;
    s.n = 5;
    s.beta = exact_beta(alpha);
    auto seeds = seed_entries(alpha, options);
    for (size_t i = 0; i < 8; i++) {
        s.entries[i] = *seeds.entries[i].exact;
    }
    for (const auto &check : initial_condition_checks(alpha, options)) {
        if (!check.matches) {
            throw std::logic_error("chain seed disagrees with the closed form for " + check.name);
        }
    }
    return s;
}

FloatChainState seed_float_chain_state(const Alpha &alpha, const EnumerationOptions &options) {
    FloatChainState s;
    s.n = 5;
    s.beta = float_beta(alpha);
    auto seeds = seed_entries(alpha, options);
    for (size_t i = 0; i < 8; i++) {
        s.entries[i] = seeds.entries[i].value;
    }
    return s;
}

PlMoment chain_pl_moment(size_t n, const Alpha &alpha, const ChainOptions &options) {
    if (n < 3) {
        throw ContractViolation("chain_pl_moment needs n >= 3, got " + std::to_string(n));
    }
    auto outcome = run_recursion(n, alpha, options, [](size_t, double) {});
    PlMoment out;
    if (outcome.exact_last) {
        out.exact = outcome.exact_last;
        out.value = out.exact->to_double();
    } else {
        out.value = std::exp2(outcome.log2_last);
    }
    if (n <= options.cross_check_up_to) {
        auto direct = exact_pl_moment(chain(n), alpha, options.enumeration);
        bool same = (out.exact && direct.exact) ? *out.exact == *direct.exact
                                                : std::abs(out.value - direct.value) <= 1e-12 * direct.value;
        if (!same) {
            throw std::logic_error("chain recursion disagrees with enumeration at n = " + std::to_string(n));
        }
    }
    return out;
}

SreResult chain_sre(size_t n, const Alpha &alpha, const ChainOptions &options) {
    if (n < 3) {
        throw ContractViolation("chain_sre needs n >= 3, got " + std::to_string(n));
    }
    auto outcome = run_recursion(n, alpha, options, [](size_t, double) {});
    SreResult out;
    out.alpha = alpha;
    out.method = Method::recursion;
    out.n = n;
    PlMoment m;
    if (outcome.exact_last) {
        m.exact = outcome.exact_last;
        m.value = m.exact->to_double();
    } else {
        m.value = std::exp2(outcome.log2_last);
    }
    out.pl_moment = m;
    double v = outcome.log2_last / (1 - alpha.value());
    out.sre = v == 0 ? 0.0 : v;
    return out;
}

std::vector<double> chain_log2_moments(size_t n_max, const Alpha &alpha, const ChainOptions &options) {
    std::vector<double> out;
    run_recursion(n_max, alpha, options, [&](size_t n, double log2m) {
        if (n - 2 != out.size()) {
            throw std::logic_error("chain recursion visited sizes out of order");
        }
        out.push_back(log2m);
    });
    return out;
}

LinearFit asymptotic_fit(const Alpha &alpha, size_t n_lo, size_t n_hi, const ChainOptions &options) {
    require_alpha(alpha);
    if (n_lo < 3 || n_hi <= n_lo) {
        throw ContractViolation(
            "asymptotic_fit needs n_hi > n_lo >= 3, got n_lo = " + std::to_string(n_lo) +
            ", n_hi = " + std::to_string(n_hi));
    }
    auto log2m = chain_log2_moments(n_hi, alpha, options);
    auto entropy = [&](size_t n) { return log2m[n - 2] / (1 - alpha.value()); };
    double d_hi = entropy(n_hi) - entropy(n_hi - 1);
    double d_lo = entropy(n_lo) - entropy(n_lo - 1);
    if (std::abs(d_hi - d_lo) > 1e-6) {
        throw ConvergenceError(
            "first differences have not settled (" + std::to_string(d_lo) + " at n = " + std::to_string(n_lo) +
            " vs " + std::to_string(d_hi) + " at n = " + std::to_string(n_hi) + "); try a larger n_hi");
    }
    LinearFit fit;
    fit.slope = d_hi;
    fit.intercept = entropy(n_hi) - d_hi * static_cast<double>(n_hi);
    return fit;
}

std::array<std::array<double, 8>, 8> transfer_matrix(const Alpha &alpha) {
    require_alpha(alpha);
    const double b = float_beta(alpha);
    std::array<std::array<double, 8>, 8> a{};
    // [0 A B; I 0 0; 0 C 0]
    a[0] = {0, 0, 0, 0.25, 0, b / 2, 0, b / 4};
    a[1] = {0, 0, 0, 0, 0, b / 2, b / 4, b / 4};
    a[2] = {0, 0, 0, 0, 0.125, b / 2, b / 4, b / 8};
    a[3][0] = 1;
    a[4][1] = 1;
    a[5][2] = 1;
    a[6] = {0, 0, 0, 0.5, 0.5, 0, 0, 0};
    a[7] = {0, 0, 0, 0, 0, 1, 0, 0};
    return a;
}

double dominant_eigenvalue(const Alpha &alpha) {
    const auto a = transfer_matrix(alpha);
    std::array<double, 8> v;
    v.fill(1.0);
    double lambda = 0;
    for (int iter = 0; iter < 20000; iter++) {
        std::array<double, 8> w{};
        for (size_t i = 0; i < 8; i++) {
            for (size_t j = 0; j < 8; j++) {
                w[i] += a[i][j] * v[j];
            }
        }
        double norm = 0;
        for (double x : w) {
            norm = std::max(norm, std::abs(x));
        }
        for (size_t i = 0; i < 8; i++) {
            v[i] = w[i] / norm;
        }
        if (iter > 100 && std::abs(norm - lambda) < 1e-16 * norm) {
            lambda = norm;
            break;
        }
        lambda = norm;
    }
    return lambda;
}

std::vector<InitialConditionCheck> initial_condition_checks(const Alpha &alpha, const EnumerationOptions &options) {
    require_alpha(alpha);
    struct Printed {
        const char *name;
        size_t n;
        std::vector<FixedBit> fixed;
        int64_t constant;   // numerator: (constant + beta_coeff * beta) / 2^shift
        int64_t beta_coeff;
        int64_t shift;
    };
    const std::vector<Printed> printed = {
        {"m3_00", 3, {{0, false}, {1, false}}, 1, 1, 1},
        {"m3_01", 3, {{0, false}, {1, true}}, 0, 1, 0},
        {"m3_1", 3, {{0, true}}, 0, 1, 0},
        {"m4_00", 4, {{0, false}, {1, false}}, 1, 3, 2},
        {"m4_01", 4, {{0, false}, {1, true}}, 0, 1, 0},
        {"m4_1", 4, {{0, true}}, 1, 7, 3},
    };
    std::vector<InitialConditionCheck> out;
    for (const auto &p : printed) {
        InitialConditionCheck check;
        check.name = p.name;
        check.actual = fixed_moment(p.n, alpha, p.fixed, options);
        if (alpha.twice_integral()) {
            Dyadic e = (Dyadic(p.constant) + Dyadic(p.beta_coeff) * exact_beta(alpha)).scaled(-p.shift);
            check.expected.exact = e;
            check.expected.value = e.to_double();
            check.matches = check.actual.exact && *check.actual.exact == e;
        } else {
            double e = std::ldexp(p.constant + p.beta_coeff * float_beta(alpha), -static_cast<int>(p.shift));
            check.expected.value = e;
            check.matches = std::abs(check.actual.value - e) <= 1e-12 * e;
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace hypersre
