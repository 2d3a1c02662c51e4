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

#ifndef LGHAP_POWER_SERIES_HPP
#define LGHAP_POWER_SERIES_HPP

#include <vector>

#include "lghap/poly.hpp"

namespace lghap {

/// Truncated formal power series in t with Poly3 coefficients:
/// c0 + c1*t + ... + cN*t^N (mod t^(N+1)). Scalar series are the special
/// case where every coefficient is a constant; there is no separate type.
///
/// Binary operations truncate to the smaller of the two orders.
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(int order) : c_(order + 1) {}

    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries one(int order) { return constant(Rational(1), order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Poly3& coeff(int k) const { return c_[k]; }
    void set_coeff(int k, const Poly3& p) { c_[k] = p; }

    /// Composable means a vanishing constant term (safe to exponentiate);
    /// invertible means a nonzero scalar constant term (safe to invert).
    bool is_composable() const { return c_[0].is_zero(); }
    bool is_invertible() const { return c_[0].is_constant() && !c_[0].is_zero(); }

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    /// Cauchy product truncated to min(order a, order b).
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& s);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    /// exp(series): sum of a^k/k! for k <= order. Throws NonZeroConstantTerm
    /// unless the series is composable.
    PowerSeries exp() const;

    /// Multiplicative inverse mod t^(order+1). Throws ZeroConstantTerm
    /// unless the series is invertible.
    PowerSeries recip() const;

    /// Termwise d/dt; the order drops by one (an order-0 input yields the
    /// order-0 zero series).
    PowerSeries derive() const;

    PowerSeries pow(int e) const;

    /// Multiplication by t: shifts coefficients up, dropping the top one.
    PowerSeries shift_up() const;

private:
    std::vector<Poly3> c_;
};

/// Truncation of C0(-x t^m) = sum_k x^k t^(mk) / (k!)^2.
PowerSeries build_c0(int m, int order);

/// exp(y*t + z*t^r) truncated at `order`.
PowerSeries build_exp_yz(int r, int order);

/// n! * [t^n] s — the coefficient in exponential-generating-function
/// normalization. Throws IndexBeyondOrder when n exceeds the order.
Poly3 egf_coeff(const PowerSeries& s, int n);

} // namespace lghap

#endif // LGHAP_POWER_SERIES_HPP
