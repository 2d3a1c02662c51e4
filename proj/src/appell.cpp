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

#include "lghap/appell.hpp"

#include <map>
#include <optional>

#include "lghap/errors.hpp"

namespace lghap {

namespace {

// lambda * e^t truncated at `order`.
PowerSeries scaled_exp(const Rational& lambda, int order) {
    PowerSeries s(order);
    Rational kfac(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0)
            kfac *= Rational(k);
        s.set_coeff(k, Poly3(lambda / kfac));
    }
    return s;
}

// (e^t - 1)/t = sum t^k/(k+1)!, the regular quotient behind t/(e^t - 1).
PowerSeries expm1_over_t(int order) {
    PowerSeries s(order);
    Rational fac(1);
    for (int k = 0; k <= order; ++k) {
        fac *= Rational(k + 1);
        s.set_coeff(k, Poly3(Rational(1) / fac));
    }
    return s;
}

// t/(lambda e^t - 1). For lambda = 1 the singular factor t cancels and
// the series is recip((e^t - 1)/t); otherwise the denominator is already
// invertible and the result is t * recip(lambda e^t - 1).
PowerSeries apostol_bernoulli_base(const Rational& lambda, int order) {
    if (lambda.is_one())
        return expm1_over_t(order).recip();
    PowerSeries den = scaled_exp(lambda, order) - PowerSeries::one(order);
    return den.recip().shift_up();
}

// 2/(lambda e^t + 1). recip throws ZeroConstantTerm when lambda = -1.
PowerSeries apostol_euler_base(const Rational& lambda, int order) {
    PowerSeries den = scaled_exp(lambda, order) + PowerSeries::one(order);
    return Rational(2) * den.recip();
}

// 1/(1 - t)^(s+1), s >= -1.
PowerSeries miller_lee_base(int s, int order) {
    PowerSeries one_minus_t = PowerSeries::one(order);
    if (order >= 1)
        one_minus_t.set_coeff(1, Poly3(Rational(-1)));
    return one_minus_t.pow(s + 1).recip();
}

struct SpecParams {
    std::optional<int> alpha;
    std::optional<Rational> lambda;
    std::optional<int> s;
    std::optional<int> beta;
};

long parse_integer(std::string_view key, std::string_view value) {
    Rational r = Rational::parse(value);
    if (!r.is_integer())
        throw InvalidParameter("parameter '" + std::string(key) + "' must be an integer, got '" +
                               std::string(value) + "'");
    if (!r.num().fits_slong_p())
        throw InvalidParameter("parameter '" + std::string(key) + "' out of range");
    return r.num().get_si();
}

SpecParams parse_params(std::string_view text) {
    SpecParams p;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw InvalidParameter("bad family parameter '" + std::string(item) +
                                   "' (expected key=value)");
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        if (key == "alpha") {
            long a = parse_integer(key, value);
            if (a < 0)
                throw InvalidParameter("alpha must be a nonnegative integer");
            p.alpha = static_cast<int>(a);
        } else if (key == "lambda") {
            Rational l = Rational::parse(value);
            if (l.is_zero())
                throw InvalidParameter("lambda must be nonzero");
            p.lambda = l;
        } else if (key == "s") {
            long s = parse_integer(key, value);
            if (s < -1)
                throw InvalidParameter("s must be an integer >= -1");
            p.s = static_cast<int>(s);
        } else if (key == "beta") {
            long b = parse_integer(key, value);
            if (b < 1)
                throw InvalidParameter("beta must be a positive integer");
            p.beta = static_cast<int>(b);
        } else {
            throw InvalidParameter("unknown family parameter '" + std::string(key) + "'");
        }
    }
    return p;
}

void reject(const SpecParams& p, bool allow_alpha, bool allow_lambda, bool allow_s,
            bool allow_beta, std::string_view name) {
    auto bad = [&](bool present, bool allowed, const char* key) {
        if (present && !allowed)
            throw InvalidParameter("parameter '" + std::string(key) + "' does not apply to family '" +
                                   std::string(name) + "'");
    };
    bad(p.alpha.has_value(), allow_alpha, "alpha");
    bad(p.lambda.has_value(), allow_lambda, "lambda");
    bad(p.s.has_value(), allow_s, "s");
    bad(p.beta.has_value(), allow_beta, "beta");
}

} // namespace

AppellFamily::AppellFamily(Kind kind, int alpha, Rational lambda, int s)
    : kind_(kind), alpha_(alpha), lambda_(std::move(lambda)), s_(s) {
    normalization_ = kind_ == Kind::miller_lee ? Normalization::ogf_base : Normalization::egf;
    switch (kind_) {
    case Kind::bernoulli: spec_ = "bernoulli"; break;
    case Kind::euler: spec_ = "euler"; break;
    case Kind::genocchi: spec_ = "genocchi"; break;
    case Kind::miller_lee: spec_ = "miller-lee:s=" + std::to_string(s_); break;
    case Kind::gen_bernoulli: spec_ = "gen-bernoulli:alpha=" + std::to_string(alpha_); break;
    case Kind::gen_euler: spec_ = "gen-euler:alpha=" + std::to_string(alpha_); break;
    case Kind::apostol_bernoulli:
        spec_ = "apostol-bernoulli:alpha=" + std::to_string(alpha_) + ",lambda=" + lambda_.str();
        break;
    case Kind::apostol_euler:
        spec_ = "apostol-euler:alpha=" + std::to_string(alpha_) + ",lambda=" + lambda_.str();
        break;
    }
}

AppellFamily AppellFamily::parse(std::string_view spec) {
    std::string_view name = spec;
    std::string_view rest;
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        name = spec.substr(0, colon);
        rest = spec.substr(colon + 1);
    }
    SpecParams p = parse_params(rest);

    if (name == "bernoulli") {
        reject(p, false, false, false, false, name);
        return AppellFamily(Kind::bernoulli, 1, Rational(1), 0);
    }
    if (name == "euler") {
        reject(p, false, false, false, false, name);
        return AppellFamily(Kind::euler, 1, Rational(1), 0);
    }
    if (name == "genocchi") {
        reject(p, false, false, false, false, name);
        return AppellFamily(Kind::genocchi, 1, Rational(1), 0);
    }
    if (name == "miller-lee") {
        reject(p, false, false, true, false, name);
        return AppellFamily(Kind::miller_lee, 1, Rational(1), p.s.value_or(0));
    }
    if (name == "trunc-exp") {
        reject(p, false, false, false, false, name);
        return AppellFamily(Kind::miller_lee, 1, Rational(1), 0);
    }
    if (name == "modified-laguerre") {
        reject(p, false, false, false, true, name);
        return AppellFamily(Kind::miller_lee, 1, Rational(1), p.beta.value_or(1) - 1);
    }
    if (name == "gen-bernoulli") {
        reject(p, true, false, false, false, name);
        return AppellFamily(Kind::gen_bernoulli, p.alpha.value_or(1), Rational(1), 0);
    }
    if (name == "gen-euler") {
        reject(p, true, false, false, false, name);
        return AppellFamily(Kind::gen_euler, p.alpha.value_or(1), Rational(1), 0);
    }
    if (name == "apostol-bernoulli") {
        reject(p, true, true, false, false, name);
        return AppellFamily(Kind::apostol_bernoulli, p.alpha.value_or(1),
                            p.lambda.value_or(Rational(1)), 0);
    }
    if (name == "apostol-euler") {
        reject(p, true, true, false, false, name);
        return AppellFamily(Kind::apostol_euler, p.alpha.value_or(1), p.lambda.value_or(Rational(1)),
                            0);
    }
    throw UnknownFamily("unknown family '" + std::string(name) + "'");
}

PowerSeries AppellFamily::a_series(int order) const {
    switch (kind_) {
    case Kind::bernoulli:
        return expm1_over_t(order).recip();
    case Kind::euler:
        return apostol_euler_base(Rational(1), order);
    case Kind::genocchi:
        return apostol_euler_base(Rational(1), order).shift_up();
    case Kind::miller_lee:
        return miller_lee_base(s_, order);
    case Kind::gen_bernoulli:
        return expm1_over_t(order).recip().pow(alpha_);
    case Kind::gen_euler:
        return apostol_euler_base(Rational(1), order).pow(alpha_);
    case Kind::apostol_bernoulli:
        return apostol_bernoulli_base(lambda_, order).pow(alpha_);
    case Kind::apostol_euler:
        return apostol_euler_base(lambda_, order).pow(alpha_);
    }
    throw Error("unreachable family kind");
}

std::vector<Rational> AppellFamily::appell_numbers(int nmax) const {
    PowerSeries a = a_series(nmax);
    std::vector<Rational> out;
    out.reserve(nmax + 1);
    for (int k = 0; k <= nmax; ++k)
        out.push_back(egf_coeff(a, k).constant_term());
    return out;
}

Poly3 AppellFamily::appell_poly(int n) const {
    if (!is_egf())
        throw NormalizationMismatch("family '" + spec_ +
                                    "' is not EGF-normalized; use base_poly instead");
    std::vector<Rational> a = appell_numbers(n);
    Poly3 p;
    for (int k = 0; k <= n; ++k)
        p += Poly3(Monomial{0, n - k, 0}, Rational::binomial(n, k) * a[k]);
    return p;
}

Poly3 AppellFamily::base_poly(int n) const {
    if (is_egf())
        return appell_poly(n);
    // Ordinary-GF base value: [t^n] A(t) e^(yt) = sum_k [t^(n-k)]A * y^k/k!.
    PowerSeries a = a_series(n);
    Poly3 p;
    Rational kfac(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            kfac *= Rational(k);
        p += Poly3(Monomial{0, k, 0}, a.coeff(n - k).constant_term() / kfac);
    }
    return p;
}

Rational AppellFamily::a0() const {
    return a_series(0).coeff(0).constant_term();
}

std::vector<Rational> AppellFamily::beta_coeffs(int nmax) const {
    std::vector<Rational> a = appell_numbers(nmax);
    if (a[0].is_zero())
        throw DegenerateFamily("family '" + spec_ + "' has A_0 = 0: no beta coefficients");
    std::vector<Rational> beta;
    beta.reserve(nmax + 1);
    beta.push_back(Rational(1) / a[0]);
    for (int n = 1; n <= nmax; ++n) {
        Rational s;
        for (int k = 1; k <= n; ++k)
            s += Rational::binomial(n, k) * a[k] * beta[n - k];
        beta.push_back(-(Rational(1) / a[0]) * s);
    }
    return beta;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "bernoulli",      "euler",     "genocchi",          "miller-lee",
        "trunc-exp",      "modified-laguerre", "gen-bernoulli", "gen-euler",
        "apostol-bernoulli", "apostol-euler",
    };
    return names;
}

} // namespace lghap
