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

#ifndef HYPERSRE_DYADIC_H
#define HYPERSRE_DYADIC_H

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypersre {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational of the form mantissa * 2^exponent.
///
/// Every moment computed for integral or half-integral alpha is such a
/// number, so sums and products stay exact without a general gcd-reducing
/// rational type. Normalized: the mantissa is odd, or zero with exponent 0.
class Dyadic {
   public:
    Dyadic() = default;
    Dyadic(int64_t value);  // NOLINT: implicit on purpose, integers are dyadic
    Dyadic(BigInt mantissa, int64_t exponent);

    static Dyadic pow2(int64_t exponent);

    const BigInt &mantissa() const {
        return mantissa_;
    }
    int64_t exponent() const {
        return exponent_;
    }
    bool is_zero() const {
        return mantissa_ == 0;
    }
    int sign() const {
        return mantissa_.sign();
    }

    Dyadic &operator+=(const Dyadic &other);
    Dyadic &operator-=(const Dyadic &other);
    Dyadic &operator*=(const Dyadic &other);
    friend Dyadic operator+(Dyadic a, const Dyadic &b) {
        return a += b;
    }
    friend Dyadic operator-(Dyadic a, const Dyadic &b) {
        return a -= b;
    }
    friend Dyadic operator*(Dyadic a, const Dyadic &b) {
        return a *= b;
    }
    Dyadic operator-() const;
    /// Multiplies by 2^k.
    Dyadic scaled(int64_t k) const;

    bool operator==(const Dyadic &other) const = default;
    friend bool operator<(const Dyadic &a, const Dyadic &b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const Dyadic &a, const Dyadic &b) {
        return (a - b).sign() <= 0;
    }

    double to_double() const;
    /// log2 of a positive value, accurate to double precision even when the
    /// value itself over- or underflows a double.
    double log2() const;

    /// "num/den" in lowest terms, e.g. "11/32"; integers print as "k/1".
    std::string fraction_string() const;
    /// Exact decimal expansion (always finite for a dyadic), e.g. "0.34375".
    std::string decimal_string() const;

   private:
    void normalize();

    BigInt mantissa_ = 0;
    int64_t exponent_ = 0;
};

}  // namespace hypersre

#endif
