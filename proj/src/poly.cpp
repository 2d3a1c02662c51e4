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

#include "lghap/poly.hpp"

#include <algorithm>
#include <vector>

namespace lghap {

const char* var_name(Var v) {
    switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    }
    return "?";
}

int Monomial::exponent(Var v) const {
    switch (v) {
    case Var::x: return ex;
    case Var::y: return ey;
    case Var::z: return ez;
    }
    return 0;
}

namespace {

Monomial with_exponent(Monomial m, Var v, int e) {
    switch (v) {
    case Var::x: m.ex = e; break;
    case Var::y: m.ey = e; break;
    case Var::z: m.ez = e; break;
    }
    return m;
}

} // namespace

Poly3::Poly3(const Rational& c) {
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

Poly3::Poly3(const Monomial& m, const Rational& c) {
    if (!c.is_zero())
        terms_.emplace(m, c);
}

Poly3 Poly3::variable(Var v) {
    return Poly3(with_exponent(Monomial{}, v, 1), Rational(1));
}

bool Poly3::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly3::constant_term() const {
    return coeff(Monomial{});
}

Rational Poly3::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly3::degree() const {
    // First term has maximal degree under the graded order.
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

int Poly3::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.exponent(v));
    return d;
}

void Poly3::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly3 Poly3::operator-() const {
    Poly3 r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(Monomial{ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez}, ca * cb);
    return r;
}

Poly3 operator*(const Rational& c, const Poly3& p) {
    Poly3 r;
    if (c.is_zero())
        return r;
    for (const auto& [m, pc] : p.terms_)
        r.terms_.emplace(m, c * pc);
    return r;
}

Poly3 Poly3::pow(int e) const {
    Poly3 r(Rational(1));
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Rational Poly3::eval(const Rational& x0, const Rational& y0, const Rational& z0) const {
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        if (m.ex) t *= x0.pow(m.ex);
        if (m.ey) t *= y0.pow(m.ey);
        if (m.ez) t *= z0.pow(m.ez);
        acc += t;
    }
    return acc;
}

Poly3 Poly3::derive(Var v, int k) const {
    if (k == 0)
        return *this;
    Poly3 r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e < k)
            continue;
        Rational f(1);
        for (int i = 0; i < k; ++i)
            f *= Rational(e - i);
        r.add_term(with_exponent(m, v, e - k), c * f);
    }
    return r;
}

Poly3 Poly3::inv_derive_x(int k) const {
    if (k == 0)
        return *this;
    Poly3 r;
    for (const auto& [m, c] : terms_) {
        Rational f(1);
        for (int i = 1; i <= k; ++i)
            f *= Rational(m.ex + i);
        r.add_term(with_exponent(m, Var::x, m.ex + k), c / f);
    }
    return r;
}

Poly3 Poly3::substitute(Var v, const Poly3& q) const {
    switch (v) {
    case Var::x: return substitute_all(q, variable(Var::y), variable(Var::z));
    case Var::y: return substitute_all(variable(Var::x), q, variable(Var::z));
    case Var::z: return substitute_all(variable(Var::x), variable(Var::y), q);
    }
    return *this;
}

Poly3 Poly3::substitute_all(const Poly3& rx, const Poly3& ry, const Poly3& rz) const {
    // Powers of each replacement computed once, on demand.
    auto powers_upto = [](const Poly3& p, int dmax) {
        std::vector<Poly3> pw;
        pw.reserve(dmax + 1);
        pw.emplace_back(Rational(1));
        for (int i = 1; i <= dmax; ++i)
            pw.push_back(pw.back() * p);
        return pw;
    };
    auto px = powers_upto(rx, degree_in(Var::x));
    auto py = powers_upto(ry, degree_in(Var::y));
    auto pz = powers_upto(rz, degree_in(Var::z));

    Poly3 r;
    for (const auto& [m, c] : terms_)
        r += c * (px[m.ex] * py[m.ey] * pz[m.ez]);
    return r;
}

std::string Poly3::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.is_negative();
        Rational mag = c.abs();
        std::string body;
        for (Var v : {Var::x, Var::y, Var::z}) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            if (!body.empty())
                body += '*';
            body += var_name(v);
            if (e > 1)
                body += '^' + std::to_string(e);
        }
        std::string term;
        if (body.empty())
            term = mag.str();
        else if (mag.is_one())
            term = body;
        else
            term = mag.str() + '*' + body;

        if (first) {
            out += neg ? "-" : "";
            out += term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

} // namespace lghap
