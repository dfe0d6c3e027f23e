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

#include "hypersre/dyadic.h"

#include <cmath>
#include <stdexcept>

#include "hypersre/errors.h"

namespace hypersre {

namespace {

int64_t bit_length(const BigInt &v) {
    BigInt a = abs(v);
    if (a == 0) {
        return 0;
    }
    return static_cast<int64_t>(boost::multiprecision::msb(a)) + 1;
}

}  // namespace

Dyadic::Dyadic(int64_t value) : mantissa_(value), exponent_(0) {
    normalize();
}

Dyadic::Dyadic(BigInt mantissa, int64_t exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
}

Dyadic Dyadic::pow2(int64_t exponent) {
    return Dyadic(BigInt(1), exponent);
}

void Dyadic::normalize() {
    if (mantissa_ == 0) {
        exponent_ = 0;
        return;
    }
    unsigned shift = boost::multiprecision::lsb(abs(mantissa_));
    if (shift > 0) {
        mantissa_ >>= shift;
        exponent_ += shift;
    }
}

Dyadic &Dyadic::operator+=(const Dyadic &other) {
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = other;
        return *this;
    }
    if (exponent_ <= other.exponent_) {
        mantissa_ += other.mantissa_ << static_cast<unsigned>(other.exponent_ - exponent_);
    } else {
        mantissa_ = (mantissa_ << static_cast<unsigned>(exponent_ - other.exponent_)) + other.mantissa_;
        exponent_ = other.exponent_;
    }
    normalize();
    return *this;
}

Dyadic &Dyadic::operator-=(const Dyadic &other) {
    return *this += -other;
}

Dyadic &Dyadic::operator*=(const Dyadic &other) {
    mantissa_ *= other.mantissa_;
    exponent_ += other.exponent_;
    normalize();
    return *this;
}

Dyadic Dyadic::operator-() const {
    Dyadic out = *this;
    out.mantissa_ = -out.mantissa_;
    return out;
}

Dyadic Dyadic::scaled(int64_t k) const {
    Dyadic out = *this;
    if (!out.is_zero()) {
        out.exponent_ += k;
    }
    return out;
}

double Dyadic::to_double() const {
    if (is_zero()) {
        return 0.0;
    }
    // Keep the top 64 significant bits; ldexp handles the range.
    int64_t bits = bit_length(mantissa_);
    int64_t drop = bits > 64 ? bits - 64 : 0;
    BigInt top = abs(mantissa_) >> static_cast<unsigned>(drop);
    double m = static_cast<double>(static_cast<uint64_t>(top));
    double v = std::ldexp(m, static_cast<int>(std::clamp<int64_t>(exponent_ + drop, -100000, 100000)));
    return sign() < 0 ? -v : v;
}

double Dyadic::log2() const {
    if (sign() <= 0) {
        throw ContractViolation("log2 of a non-positive dyadic");
    }
    int64_t bits = bit_length(mantissa_);
    int64_t drop = bits > 64 ? bits - 64 : 0;
    BigInt top = mantissa_ >> static_cast<unsigned>(drop);
    double m = static_cast<double>(static_cast<uint64_t>(top));
    return std::log2(m) + static_cast<double>(exponent_ + drop);
}

std::string Dyadic::fraction_string() const {
    if (exponent_ >= 0) {
        BigInt num = mantissa_ << static_cast<unsigned>(exponent_);
        return num.str() + "/1";
    }
    BigInt den = BigInt(1) << static_cast<unsigned>(-exponent_);
    return mantissa_.str() + "/" + den.str();
}

std::string Dyadic::decimal_string() const {
    if (exponent_ >= 0) {
        return BigInt(mantissa_ << static_cast<unsigned>(exponent_)).str();
    }
    // m / 2^k == m * 5^k / 10^k.
    auto k = static_cast<unsigned>(-exponent_);
    BigInt scaled = abs(mantissa_) * boost::multiprecision::pow(BigInt(5), k);
    std::string digits = scaled.str();
    if (digits.size() <= k) {
        digits.insert(0, k - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - k, ".");
    return (sign() < 0 ? "-" : "") + digits;
}

}  // namespace hypersre
