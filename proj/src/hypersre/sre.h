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

#ifndef HYPERSRE_SRE_H
#define HYPERSRE_SRE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersre/dyadic.h"
#include "hypersre/hypergraph.h"

namespace hypersre {

/// Renyi index. Finite values other than 1 use the moment formula; 1 and
/// infinity have closed forms of their own.
class Alpha {
   public:
    enum class Kind { finite, one, infinity };

    /// Throws ContractViolation unless value > 0 and finite. A value of
    /// exactly 1 yields Alpha::one().
    static Alpha finite(double value);
    static Alpha one() {
        return Alpha(Kind::one, 1.0);
    }
    static Alpha infinity() {
        return Alpha(Kind::infinity, 0.0);
    }
    /// Accepts decimal numbers, "1", and "inf"/"infinity".
    static Alpha parse(std::string_view text);

    Kind kind() const {
        return kind_;
    }
    bool is_finite() const {
        return kind_ == Kind::finite;
    }
    /// Numeric value; 1 for one(). Throws for infinity.
    double value() const;
    /// 2 * alpha when that is an integer. Moments are then exact dyadics.
    std::optional<int64_t> twice_integral() const;

    std::string str() const;

    bool operator==(const Alpha &other) const = default;

   private:
    Alpha(Kind kind, double value) : kind_(kind), value_(value) {
    }

    Kind kind_;
    double value_;
};

/// Pauli-Liouville moment; `exact` is set whenever it is an exact dyadic.
struct PlMoment {
    double value = 0.0;
    std::optional<Dyadic> exact;
};

enum class Method { exact, monte_carlo, recursion, bound };
std::string_view to_string(Method m);

struct SreResult {
    Alpha alpha = Alpha::one();
    /// Absent for alpha = infinity.
    std::optional<PlMoment> pl_moment;
    /// Entropy in bits.
    double sre = 0.0;
    /// Exact value when available (alpha = 1 gives a dyadic mean rank).
    std::optional<Dyadic> sre_exact;
    Method method = Method::exact;
    size_t n = 0;
};

struct McEstimate {
    double mean = 0.0;
    /// Sample standard deviation over sqrt(samples), i.e. one standard error.
    double std_error = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    double sre_point = 0.0;
};

inline constexpr size_t kDefaultEnumerationCap = 28;

struct EnumerationOptions {
    /// Largest number of free x bits an exact sum will enumerate.
    size_t max_qubits = kDefaultEnumerationCap;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct FixedBit {
    size_t index;
    bool value;
};

/// counts[h] is the number of x (consistent with the fixed bits) whose
/// rank(C(x) + C(x)^T) equals 2h. The histogram sums to 2^free_bits.
struct RankHistogram {
    std::vector<uint64_t> counts;
    size_t free_bits = 0;
};

/// Enumerates every x with the given bits pinned, in Gray-code order over the
/// free bits. The x-space is split into contiguous blocks that workers handle
/// independently; the result does not depend on the number of workers.
RankHistogram rank_histogram(
    const Hypergraph3 &h, const std::vector<FixedBit> &fixed = {}, const EnumerationOptions &options = {});

/// 2^-free * sum_h counts[h] * 2^((1 - alpha) 2h) for finite alpha != 1.
PlMoment moment_from_histogram(const RankHistogram &hist, const Alpha &alpha);

/// Mean of 2h(x) over the histogram, in bits.
Dyadic mean_rank(const RankHistogram &hist);

/// m_alpha = 2^-N sum_x 2^((1 - alpha) 2h(x)). Exact dyadic when 2 alpha is
/// an integer, compensated floating point otherwise.
PlMoment exact_pl_moment(const Hypergraph3 &h, const Alpha &alpha, const EnumerationOptions &options = {});

/// M_alpha = log2(m_alpha) / (1 - alpha) for a finite alpha != 1.
double sre_from_moment(const Alpha &alpha, const PlMoment &moment);
double sre_from_moment(const Alpha &alpha, double moment);

/// Stabilizer Renyi entropy by exhaustive enumeration. alpha = 1 is the mean
/// rank; alpha = infinity is 0 because x = 0 always has rank 0.
SreResult sre(const Hypergraph3 &h, const Alpha &alpha, const EnumerationOptions &options = {});

/// Monte Carlo estimate from `samples` uniform x. Sample i draws its bits
/// from a stream keyed by (seed, i) alone, so the estimate is the same for
/// any thread count.
McEstimate mc_sre(
    const Hypergraph3 &h, const Alpha &alpha, uint64_t samples, uint64_t seed, const EnumerationOptions &options = {});

/// Bit string drawn for Monte Carlo sample `index`.
BitString mc_sample_bits(size_t n, uint64_t seed, uint64_t index);

enum class BoundVariant { per_vertex, jensen };

/// Subadditivity bound on M_alpha for alpha > 1, either summed per vertex or
/// relaxed through the mean rank h_bar.
double upper_bound(const Hypergraph3 &h, const Alpha &alpha, BoundVariant variant);
double upper_bound(const VertexStats &stats, const Alpha &alpha, BoundVariant variant);

/// The earlier degree-based bound N/(alpha-1) [1 - log2(1 + 2^-(2 alpha - 1) delta_bar)].
double prev_upper_bound(const Hypergraph3 &h, const Alpha &alpha);
double prev_upper_bound(const VertexStats &stats, const Alpha &alpha);

}  // namespace hypersre

#endif
