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

#include "lghap/operators.hpp"

#include "lghap/errors.hpp"

namespace lghap {

Poly3 DiffOpSeries::apply(const Poly3& q) const {
    Poly3 out;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero())
            continue;
        Poly3 dq = q.derive(Var::y, k);
        if (dq.is_zero())
            continue;
        out += c_[k] * dq;
    }
    return out;
}

Poly3 apply_M_lgh(const LghParams& p, const Poly3& q) {
    Poly3 out = Poly3::variable(Var::y) * q;
    out += Rational(p.m) * q.derive(Var::y, p.m - 1).inv_derive_x();
    out += Rational(p.r) * (Poly3::variable(Var::z) * q.derive(Var::y, p.r - 1));
    return out;
}

Poly3 apply_P_lgh(const Poly3& q) {
    return q.derive(Var::y);
}

DiffOpSeries gog_series(const AppellFamily& f, int order) {
    if (f.a0().is_zero())
        throw DegenerateFamily("family '" + f.spec() + "' has A_0 = 0: g = 1/A is singular");
    // g = 1/A; the quotient g'/g needs one extra order of A before the
    // derivative drops it back down.
    PowerSeries g = f.a_series(order + 1).recip();
    PowerSeries quot = g.derive() * g.recip();
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (int k = 0; k <= order; ++k)
        c.push_back(quot.coeff(k).constant_term());
    return DiffOpSeries(std::move(c));
}

Poly3 apply_M_lgha(const AppellFamily& f, const LghParams& p, const Poly3& q) {
    DiffOpSeries gog = gog_series(f, q.degree_in(Var::y));
    return apply_M_lgh(p, q) - gog.apply(q);
}

Poly3 ode_residual_lghp(const LghParams& p, int n, const Poly3& q) {
    Poly3 res = Rational(p.m) * q.derive(Var::y, p.m);
    res += Rational(p.r) * (Poly3::variable(Var::z) * q.derive(Var::y, p.r).derive(Var::x));
    res += Poly3::variable(Var::y) * q.derive(Var::y).derive(Var::x);
    res -= Rational(n) * q.derive(Var::x);
    return res;
}

Poly3 ode_residual_lghap(const AppellFamily& f, const LghParams& p, int n, const Poly3& q) {
    DiffOpSeries gog = gog_series(f, q.degree_in(Var::y));
    Poly3 res = Poly3::variable(Var::y) * q.derive(Var::y);
    res += Rational(p.m) * q.derive(Var::y, p.m).inv_derive_x();
    res += Rational(p.r) * (Poly3::variable(Var::z) * q.derive(Var::y, p.r));
    res -= gog.apply(q.derive(Var::y));
    res -= Rational(n) * q;
    return res;
}

Poly3 exp_op_apply(XAction action, int stride, const Poly3& q) {
    if (stride < 1)
        throw InvalidParameter("exponential-operator stride must be >= 1");
    Poly3 out;
    Rational kfac(1);
    for (int k = 0;; ++k) {
        if (k > 0)
            kfac *= Rational(k);
        Poly3 dq = q.derive(Var::y, stride * k);
        if (dq.is_zero() && k > 0)
            break;
        switch (action) {
        case XAction::none:
            break;
        case XAction::inv_derive_x:
            dq = dq.inv_derive_x(k);
            break;
        case XAction::multiply_z:
            dq = Poly3(Monomial{0, 0, k}, Rational(1)) * dq;
            break;
        }
        out += (Rational(1) / kfac) * dq;
    }
    return out;
}

bool crofton_check(const Poly3& fy, const Rational& lambda, int m) {
    if (m < 2)
        throw InvalidParameter("crofton check needs m >= 2");
    if (fy.degree_in(Var::x) > 0 || fy.degree_in(Var::z) > 0)
        throw InvalidParameter("crofton check expects a polynomial in y only");

    // Right side: exp(lambda d^m/dy^m) f, a finite sum.
    Poly3 rhs;
    Rational kfac(1);
    for (int k = 0;; ++k) {
        if (k > 0)
            kfac *= Rational(k);
        Poly3 dq = fy.derive(Var::y, m * k);
        if (dq.is_zero() && k > 0)
            break;
        rhs += (lambda.pow(k) / kfac) * dq;
    }

    // Left side: f(Y){1} with Y = y + m lambda d^(m-1)/dy^(m-1), expanded
    // monomial by monomial through iterated application to 1.
    auto apply_Y = [&](const Poly3& q) {
        return Poly3::variable(Var::y) * q +
               (Rational(m) * lambda) * q.derive(Var::y, m - 1);
    };
    std::vector<Poly3> ypow; // Y^d {1}
    ypow.emplace_back(Rational(1));
    for (int d = 1; d <= fy.degree_in(Var::y); ++d)
        ypow.push_back(apply_Y(ypow.back()));

    Poly3 lhs;
    for (const auto& [mono, c] : fy.terms())
        lhs += c * ypow[mono.ey];

    return lhs == rhs;
}

Poly3 commutator_check(const LghParams& p, const Poly3& q) {
    Poly3 pm = apply_P_lgh(apply_M_lgh(p, q));
    Poly3 mp = apply_M_lgh(p, apply_P_lgh(q));
    return pm - mp - q;
}

} // namespace lghap
