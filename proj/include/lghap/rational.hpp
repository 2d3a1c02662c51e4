/*
   Copyright 2026 The lghap authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LGHAP_RATIONAL_HPP
#define LGHAP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "lghap/errors.hpp"

namespace lghap {

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator; zero is 0/1. No rounding anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);

    /// Parses "p/q" or "p" (optional sign). Decimal literals are rejected.
    static Rational parse(std::string_view text);

    static Rational factorial(unsigned long n);
    static Rational binomial(unsigned long n, unsigned long k);

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational pow(unsigned long e) const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    /// Canonical text: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Fixed-point decimal with `digits` fractional digits, ties rounded
    /// to even. digits = 0 renders a plain integer.
    std::string decimal(unsigned digits) const;

private:
    mpq_class v_;
};

} // namespace lghap

#endif // LGHAP_RATIONAL_HPP
