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

#include "lghap/power_series.hpp"

#include <algorithm>

#include "lghap/errors.hpp"

namespace lghap {

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.c_[0] = Poly3(c);
    return s;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(order());
    for (int k = 0; k <= order(); ++k)
        r.c_[k] = -c_[k];
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k)
        r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k)
        r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero())
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& s) {
    PowerSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k)
        r.c_[k] = c * s.c_[k];
    return r;
}

PowerSeries PowerSeries::exp() const {
    if (!is_composable())
        throw NonZeroConstantTerm("series exp requires a zero constant term");
    // a^k starts at t^k, so the sum below is finite and exact.
    PowerSeries acc = one(order());
    PowerSeries p = one(order());
    Rational kfac(1);
    for (int k = 1; k <= order(); ++k) {
        p = p * *this;
        kfac *= Rational(k);
        acc = acc + (Rational(1) / kfac) * p;
    }
    return acc;
}

PowerSeries PowerSeries::recip() const {
    if (!is_invertible())
        throw ZeroConstantTerm("series reciprocal requires a nonzero scalar constant term");
    Rational c0 = c_[0].constant_term();
    Rational inv0 = Rational(1) / c0;
    PowerSeries r(order());
    r.c_[0] = Poly3(inv0);
    for (int n = 1; n <= order(); ++n) {
        Poly3 s;
        for (int k = 1; k <= n; ++k)
            s += c_[k] * r.c_[n - k];
        r.c_[n] = (-inv0) * s;
    }
    return r;
}

PowerSeries PowerSeries::derive() const {
    int n = std::max(order() - 1, 0);
    PowerSeries r(n);
    for (int k = 0; k + 1 <= order() && k <= n; ++k)
        r.c_[k] = Rational(k + 1) * c_[k + 1];
    return r;
}

PowerSeries PowerSeries::pow(int e) const {
    PowerSeries r = one(order());
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

PowerSeries PowerSeries::shift_up() const {
    PowerSeries r(order());
    for (int k = 1; k <= order(); ++k)
        r.c_[k] = c_[k - 1];
    return r;
}

PowerSeries build_c0(int m, int order) {
    // C0(-x t^m) = sum x^k t^(mk) / (k!)^2; the alternating signs of the
    // Bessel-Tricomi series cancel against the negated argument.
    PowerSeries s(order);
    Rational kfac(1);
    for (int k = 0; m * k <= order; ++k) {
        if (k > 0)
            kfac *= Rational(k);
        s.set_coeff(m * k, Poly3(Monomial{k, 0, 0}, Rational(1) / (kfac * kfac)));
    }
    return s;
}

PowerSeries build_exp_yz(int r, int order) {
    PowerSeries arg(order);
    if (order >= 1)
        arg.set_coeff(1, Poly3::variable(Var::y));
    if (r <= order) {
        Poly3 c = arg.coeff(r);
        c += Poly3::variable(Var::z);
        arg.set_coeff(r, c);
    }
    return arg.exp();
}

Poly3 egf_coeff(const PowerSeries& s, int n) {
    if (n < 0 || n > s.order())
        throw IndexBeyondOrder("coefficient index " + std::to_string(n) +
                               " beyond series order " + std::to_string(s.order()));
    return Rational::factorial(n) * s.coeff(n);
}

} // namespace lghap
