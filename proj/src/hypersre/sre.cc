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

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <thread>

#include "hypersre/errors.h"

namespace hypersre {

// ---------------------------------------------------------------------------
// Alpha

Alpha Alpha::finite(double value) {
    if (!std::isfinite(value) || value <= 0) {
        throw ContractViolation("alpha must be a positive finite number");
    }
    if (value == 1.0) {
        return one();
    }
    return Alpha(Kind::finite, value);
}

Alpha Alpha::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") {
        return infinity();
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("alpha: cannot parse '" + std::string(text) + "'");
    }
    if (!std::isfinite(v) || v <= 0) {
        throw std::invalid_argument("alpha: must be positive, got '" + std::string(text) + "'");
    }
    return finite(v);
}

double Alpha::value() const {
    if (kind_ == Kind::infinity) {
        throw ContractViolation("alpha = infinity has no finite value");
    }
    return value_;
}

std::optional<int64_t> Alpha::twice_integral() const {
    if (kind_ == Kind::infinity) {
        return std::nullopt;
    }
    double twice = 2 * value_;
    if (twice == std::floor(twice) && twice < 1e6) {
        return static_cast<int64_t>(twice);
    }
    return std::nullopt;
}

std::string Alpha::str() const {
    if (kind_ == Kind::infinity) {
        return "inf";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
    return std::string(buf, ptr);
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::exact:
            return "exact";
        case Method::monte_carlo:
            return "monte_carlo";
        case Method::recursion:
            return "recursion";
        case Method::bound:
            return "bound";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void require_moment_alpha(const Alpha &alpha, const char *what) {
    if (!alpha.is_finite()) {
        throw ContractViolation(std::string(what) + " needs a finite alpha other than 1");
    }
}

// Runs body(block) for block in [0, num_blocks) on up to `threads` workers.
template <typename Body>
void for_each_block(size_t num_blocks, unsigned threads, Body &&body) {
    threads = static_cast<unsigned>(std::min<size_t>(threads, num_blocks));
    if (threads <= 1) {
        for (size_t b = 0; b < num_blocks; b++) {
            body(b);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back([&] {
            try {
                for (size_t b = next++; b < num_blocks && !failed; b = next++) {
                    body(b);
                }
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

// Symmetrized C'_k for every vertex, one word per row (n <= 64).
std::vector<uint64_t> packed_vertex_matrices(const Hypergraph3 &h) {
    const size_t n = h.num_qubits();
    std::vector<uint64_t> mats(n * n, 0);
    for (const auto &[i, j, k] : h.edges3()) {
        auto link = [&](size_t owner, size_t a, size_t b) {
            mats[owner * n + a] ^= uint64_t{1} << b;
            mats[owner * n + b] ^= uint64_t{1} << a;
        };
        link(i, j, k);
        link(j, i, k);
        link(k, i, j);
    }
    return mats;
}

struct EnumerationPlan {
    std::vector<size_t> free;
    std::vector<uint8_t> base_x;
};

EnumerationPlan plan_enumeration(const Hypergraph3 &h, const std::vector<FixedBit> &fixed, size_t cap) {
    const size_t n = h.num_qubits();
    EnumerationPlan plan;
    plan.base_x.assign(n, 0);
    std::vector<bool> pinned(n, false);
    for (const auto &f : fixed) {
        if (f.index >= n) {
            throw ContractViolation("fixed index " + std::to_string(f.index) + " out of range");
        }
        if (pinned[f.index]) {
            throw ContractViolation("fixed index " + std::to_string(f.index) + " given twice");
        }
        pinned[f.index] = true;
        plan.base_x[f.index] = f.value;
    }
    for (size_t i = 0; i < n; i++) {
        if (!pinned[i]) {
            plan.free.push_back(i);
        }
    }
    if (plan.free.size() > cap) {
        throw CapacityError(
            "exact enumeration over " + std::to_string(plan.free.size()) + " free bits exceeds the cap of " +
                std::to_string(cap),
            "--max-n");
    }
    return plan;
}

size_t choose_block_count(size_t free_bits, unsigned threads) {
    size_t total = size_t{1} << free_bits;
    size_t blocks = std::max<size_t>(1, size_t{threads} * 16);
    return std::min(blocks, total);
}

RankHistogram histogram_packed(const Hypergraph3 &h, const EnumerationPlan &plan, unsigned threads) {
    const size_t n = h.num_qubits();
    const size_t free_bits = plan.free.size();
    const uint64_t total = uint64_t{1} << free_bits;
    const auto mats = packed_vertex_matrices(h);

    std::vector<uint64_t> base(n, 0);
    for (size_t k = 0; k < n; k++) {
        if (plan.base_x[k]) {
            for (size_t r = 0; r < n; r++) {
                base[r] ^= mats[k * n + r];
            }
        }
    }

    const size_t num_blocks = choose_block_count(free_bits, threads);
    std::vector<std::vector<uint64_t>> partial(num_blocks, std::vector<uint64_t>(n / 2 + 1, 0));
    for_each_block(num_blocks, threads, [&](size_t block) {
        uint64_t lo = total * block / num_blocks;
        uint64_t hi = total * (block + 1) / num_blocks;
        std::vector<uint64_t> cur = base;
        std::vector<uint64_t> work(n);
        auto toggle = [&](size_t free_index) {
            const uint64_t *m = &mats[plan.free[free_index] * n];
            for (size_t r = 0; r < n; r++) {
                cur[r] ^= m[r];
            }
        };
        uint64_t gray = lo ^ (lo >> 1);
        for (size_t b = 0; b < free_bits; b++) {
            if ((gray >> b) & 1) {
                toggle(b);
            }
        }
        auto &counts = partial[block];
        for (uint64_t t = lo; t < hi; t++) {
            if (t != lo) {
                toggle(static_cast<size_t>(std::countr_zero(t)));
            }
            std::copy(cur.begin(), cur.end(), work.begin());
            counts[rank_single_word_rows(work) / 2]++;
        }
    });

    RankHistogram hist;
    hist.free_bits = free_bits;
    hist.counts.assign(n / 2 + 1, 0);
    for (const auto &p : partial) {
        for (size_t i = 0; i < p.size(); i++) {
            hist.counts[i] += p[i];
        }
    }
    return hist;
}

RankHistogram histogram_generic(const Hypergraph3 &h, const EnumerationPlan &plan, unsigned threads) {
    const size_t n = h.num_qubits();
    const size_t free_bits = plan.free.size();
    const uint64_t total = uint64_t{1} << free_bits;
    std::vector<BitMatrix> mats;
    mats.reserve(plan.free.size());
    for (size_t idx : plan.free) {
        mats.push_back(symmetrize_upper(vertex_matrix(h, idx)));
    }
    const BitMatrix base = symmetrize_upper(c_matrix(h, plan.base_x));

    const size_t num_blocks = choose_block_count(free_bits, threads);
    std::vector<std::vector<uint64_t>> partial(num_blocks, std::vector<uint64_t>(n / 2 + 1, 0));
    for_each_block(num_blocks, threads, [&](size_t block) {
        uint64_t lo = total * block / num_blocks;
        uint64_t hi = total * (block + 1) / num_blocks;
        BitMatrix cur = base;
        uint64_t gray = lo ^ (lo >> 1);
        for (size_t b = 0; b < free_bits; b++) {
            if ((gray >> b) & 1) {
                cur ^= mats[b];
            }
        }
        auto &counts = partial[block];
        for (uint64_t t = lo; t < hi; t++) {
            if (t != lo) {
                cur ^= mats[static_cast<size_t>(std::countr_zero(t))];
            }
            counts[rank(cur) / 2]++;
        }
    });

    RankHistogram hist;
    hist.free_bits = free_bits;
    hist.counts.assign(n / 2 + 1, 0);
    for (const auto &p : partial) {
        for (size_t i = 0; i < p.size(); i++) {
            hist.counts[i] += p[i];
        }
    }
    return hist;
}

// Neumaier-compensated running sum.
class CompensatedSum {
   public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const {
        return sum_ + comp_;
    }

   private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

RankHistogram rank_histogram(const Hypergraph3 &h, const std::vector<FixedBit> &fixed, const EnumerationOptions &options) {
    auto plan = plan_enumeration(h, fixed, options.max_qubits);
    unsigned threads = resolve_threads(options.threads);
    if (h.num_qubits() <= 64) {
        return histogram_packed(h, plan, threads);
    }
    return histogram_generic(h, plan, threads);
}

PlMoment moment_from_histogram(const RankHistogram &hist, const Alpha &alpha) {
    require_moment_alpha(alpha, "moment_from_histogram");
    PlMoment out;
    const auto free_bits = static_cast<int64_t>(hist.free_bits);
    if (auto k = alpha.twice_integral()) {
        // 2^((1 - alpha) 2h) = 2^(h (2 - 2 alpha)).
        Dyadic acc;
        for (size_t hv = 0; hv < hist.counts.size(); hv++) {
            if (hist.counts[hv] == 0) {
                continue;
            }
            acc += Dyadic(BigInt(hist.counts[hv]), static_cast<int64_t>(hv) * (2 - *k));
        }
        out.exact = acc.scaled(-free_bits);
        out.value = out.exact->to_double();
        return out;
    }
    CompensatedSum acc;
    for (size_t hv = 0; hv < hist.counts.size(); hv++) {
        if (hist.counts[hv] == 0) {
            continue;
        }
        double term = std::exp2((1 - alpha.value()) * 2.0 * static_cast<double>(hv) - static_cast<double>(free_bits));
        acc.add(static_cast<double>(hist.counts[hv]) * term);
    }
    out.value = acc.value();
    return out;
}

Dyadic mean_rank(const RankHistogram &hist) {
    Dyadic acc;
    for (size_t hv = 0; hv < hist.counts.size(); hv++) {
        acc += Dyadic(BigInt(hist.counts[hv]) * (2 * hv), 0);
    }
    return acc.scaled(-static_cast<int64_t>(hist.free_bits));
}

PlMoment exact_pl_moment(const Hypergraph3 &h, const Alpha &alpha, const EnumerationOptions &options) {
    require_moment_alpha(alpha, "exact_pl_moment");
    return moment_from_histogram(rank_histogram(h, {}, options), alpha);
}

double sre_from_moment(const Alpha &alpha, double moment) {
    require_moment_alpha(alpha, "sre_from_moment");
    double v = std::log2(moment) / (1 - alpha.value());
    return v == 0 ? 0.0 : v;
}

double sre_from_moment(const Alpha &alpha, const PlMoment &moment) {
    require_moment_alpha(alpha, "sre_from_moment");
    if (moment.exact) {
        double v = moment.exact->log2() / (1 - alpha.value());
        return v == 0 ? 0.0 : v;
    }
    return sre_from_moment(alpha, moment.value);
}

SreResult sre(const Hypergraph3 &h, const Alpha &alpha, const EnumerationOptions &options) {
    SreResult out;
    out.alpha = alpha;
    out.method = Method::exact;
    out.n = h.num_qubits();
    switch (alpha.kind()) {
        case Alpha::Kind::infinity: {
            // min_x 2h(x) is attained at x = 0, where C(x) vanishes.
            BitString zero(h.num_qubits(), 0);
            if (rank(symmetrize_upper(c_matrix(h, zero))) != 0) {
                throw std::logic_error("C(0) is not the zero matrix");
            }
            out.sre = 0.0;
            out.sre_exact = Dyadic(0);
            return out;
        }
        case Alpha::Kind::one: {
            auto hist = rank_histogram(h, {}, options);
            out.pl_moment = PlMoment{1.0, Dyadic(1)};
            out.sre_exact = mean_rank(hist);
            out.sre = out.sre_exact->to_double();
            return out;
        }
        case Alpha::Kind::finite:
            break;
    }
    out.pl_moment = exact_pl_moment(h, alpha, options);
    out.sre = sre_from_moment(alpha, *out.pl_moment);
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t sample_stream_state(uint64_t seed, uint64_t index) {
    uint64_t s = seed;
    uint64_t key = splitmix64(s);
    uint64_t t = index ^ 0xd1b54a32d192ed03ULL;
    return key ^ splitmix64(t);
}

size_t sample_rank(const Hypergraph3 &h, const BitString &x) {
    const size_t n = h.num_qubits();
    if (n <= 64) {
        std::vector<uint64_t> rows(n, 0);
        for (const auto &[i, j, k] : h.edges3()) {
            auto link = [&](size_t a, size_t b) {
                rows[a] ^= uint64_t{1} << b;
                rows[b] ^= uint64_t{1} << a;
            };
            if (x[i]) {
                link(j, k);
            }
            if (x[j]) {
                link(i, k);
            }
            if (x[k]) {
                link(i, j);
            }
        }
        return rank_single_word_rows(rows);
    }
    return rank(symmetrize_upper(c_matrix(h, x)));
}

}  // namespace

BitString mc_sample_bits(size_t n, uint64_t seed, uint64_t index) {
    uint64_t state = sample_stream_state(seed, index);
    BitString x(n);
    uint64_t word = 0;
    for (size_t i = 0; i < n; i++) {
        if (i % 64 == 0) {
            word = splitmix64(state);
        }
        x[i] = (word >> (i % 64)) & 1;
    }
    return x;
}

McEstimate mc_sre(
    const Hypergraph3 &h, const Alpha &alpha, uint64_t samples, uint64_t seed, const EnumerationOptions &options) {
    require_moment_alpha(alpha, "mc_sre");
    if (samples < 2) {
        throw ContractViolation("mc_sre needs at least 2 samples");
    }
    const size_t n = h.num_qubits();
    std::vector<uint32_t> two_h(samples);
    unsigned threads = resolve_threads(options.threads);
    size_t num_blocks = std::min<uint64_t>(samples, std::max<uint64_t>(1, uint64_t{threads} * 8));
    for_each_block(num_blocks, threads, [&](size_t block) {
        uint64_t lo = samples * block / num_blocks;
        uint64_t hi = samples * (block + 1) / num_blocks;
        for (uint64_t i = lo; i < hi; i++) {
            two_h[i] = static_cast<uint32_t>(sample_rank(h, mc_sample_bits(n, seed, i)));
        }
    });

    const double exponent = 1 - alpha.value();
    CompensatedSum sum;
    for (uint32_t r : two_h) {
        sum.add(std::exp2(exponent * r));
    }
    const auto m = static_cast<double>(samples);
    const double mean = sum.value() / m;
    CompensatedSum sq;
    for (uint32_t r : two_h) {
        double d = std::exp2(exponent * r) - mean;
        sq.add(d * d);
    }
    McEstimate est;
    est.mean = mean;
    est.std_error = std::sqrt(sq.value() / (m - 1) / m);
    est.samples = samples;
    est.seed = seed;
    est.sre_point = sre_from_moment(alpha, mean);
    return est;
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

double bound_alpha(const Alpha &alpha, const char *what) {
    if (!alpha.is_finite() || alpha.value() <= 1) {
        throw ContractViolation(std::string(what) + " holds only for finite alpha > 1");
    }
    return alpha.value();
}

// 1 - log2(1 + 2^-exponent)
double bound_term(double exponent) {
    return 1 - std::log1p(std::exp2(-exponent)) / std::numbers::ln2;
}

double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

double upper_bound(const VertexStats &stats, const Alpha &alpha, BoundVariant variant) {
    const double a = bound_alpha(alpha, "upper_bound");
    const auto n = static_cast<double>(stats.h.size());
    if (variant == BoundVariant::jensen) {
        return n / (a - 1) * bound_term((a - 1) * 2 * to_double(stats.h_bar));
    }
    CompensatedSum acc;
    for (size_t hk : stats.h) {
        acc.add(bound_term((a - 1) * 2 * static_cast<double>(hk)));
    }
    return acc.value() / (a - 1);
}

double upper_bound(const Hypergraph3 &h, const Alpha &alpha, BoundVariant variant) {
    bound_alpha(alpha, "upper_bound");
    return upper_bound(vertex_stats(h), alpha, variant);
}

double prev_upper_bound(const VertexStats &stats, const Alpha &alpha) {
    const double a = bound_alpha(alpha, "prev_upper_bound");
    const auto n = static_cast<double>(stats.h.size());
    return n / (a - 1) * bound_term((2 * a - 1) * to_double(stats.delta_bar));
}

double prev_upper_bound(const Hypergraph3 &h, const Alpha &alpha) {
    bound_alpha(alpha, "prev_upper_bound");
    return prev_upper_bound(vertex_stats(h), alpha);
}

}  // namespace hypersre
