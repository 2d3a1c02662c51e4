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

#include <doctest.h>

#include <random>

#include "lghap/errors.hpp"
#include "lghap/power_series.hpp"
#include "test_util.hpp"

using namespace lghap;

namespace {

// sum t^k/(k+1)!, the entire quotient (e^t - 1)/t.
PowerSeries expm1_over_t(int order) {
    PowerSeries s(order);
    Rational fac(1);
    for (int k = 0; k <= order; ++k) {
        fac *= Rational(k + 1);
        s.set_coeff(k, Poly3(Rational(1) / fac));
    }
    return s;
}

PowerSeries random_scalar_series(std::mt19937& rng, int order, bool invertible) {
    std::uniform_int_distribution<int> cdist(-9, 9);
    std::uniform_int_distribution<int> ddist(1, 4);
    PowerSeries s(order);
    for (int k = 0; k <= order; ++k)
        s.set_coeff(k, Poly3(Rational(cdist(rng), ddist(rng))));
    if (invertible) {
        Rational c0 = s.coeff(0).constant_term();
        if (c0.is_zero())
            s.set_coeff(0, Poly3(Rational(1)));
    } else {
        s.set_coeff(0, Poly3());
    }
    return s;
}

} // namespace

TEST_SUITE("power_series") {

TEST_CASE("cauchy product") {
    PowerSeries a = PowerSeries::one(4);
    a.set_coeff(1, Poly3(Rational(1)));
    PowerSeries b = PowerSeries::one(4);
    b.set_coeff(1, Poly3(Rational(-1)));
    PowerSeries prod = a * b;
    CHECK(prod.coeff(0) == Poly3(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == Poly3(Rational(-1)));
    CHECK(prod.coeff(3).is_zero());
    CHECK(prod.coeff(4).is_zero());

    PowerSeries s = expm1_over_t(6);
    CHECK(s * PowerSeries::one(6) == s);
    // reciprocal pair: t/(e^t-1) times (e^t-1)/t is 1 mod t^7
    CHECK(s.recip() * s == PowerSeries::one(6));
}

TEST_CASE("product truncates to the smaller order") {
    PowerSeries a = PowerSeries::one(5);
    PowerSeries b = PowerSeries::one(3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
}

TEST_CASE("exponential") {
    CHECK(PowerSeries(5).exp() == PowerSeries::one(5));

    PowerSeries yt(3);
    yt.set_coeff(1, Poly3::variable(Var::y));
    PowerSeries e = yt.exp();
    Poly3 y = Poly3::variable(Var::y);
    CHECK(e.coeff(0) == Poly3(1));
    CHECK(e.coeff(1) == y);
    CHECK(e.coeff(2) == Rational(1, 2) * (y * y));
    CHECK(e.coeff(3) == Rational(1, 6) * y.pow(3));

    PowerSeries arg = build_exp_yz(2, 4);
    CHECK(arg.coeff(2) == Rational(1, 2) * (y * y) + Poly3::variable(Var::z));

    PowerSeries bad = PowerSeries::one(3);
    CHECK_THROWS_AS(bad.exp(), NonZeroConstantTerm);
}

TEST_CASE("reciprocal") {
    PowerSeries one_minus_t = PowerSeries::one(5);
    one_minus_t.set_coeff(1, Poly3(Rational(-1)));
    PowerSeries geo = one_minus_t.recip();
    for (int k = 0; k <= 5; ++k)
        CHECK(geo.coeff(k) == Poly3(1));

    CHECK(PowerSeries::one(4).recip() == PowerSeries::one(4));

    // coefficients of t/(e^t - 1): the EGF-scaled Bernoulli numbers
    PowerSeries bern = expm1_over_t(4).recip();
    CHECK(bern.coeff(0) == Poly3(1));
    CHECK(bern.coeff(1) == Poly3(Rational(-1, 2)));
    CHECK(bern.coeff(2) == Poly3(Rational(1, 12)));
    CHECK(bern.coeff(3).is_zero());
    CHECK(bern.coeff(4) == Poly3(Rational(-1, 720)));

    CHECK_THROWS_AS(PowerSeries(3).recip(), ZeroConstantTerm);
}

TEST_CASE("derivative") {
    CHECK(PowerSeries::one(4).derive() == PowerSeries(3));
    PowerSeries t2(4);
    t2.set_coeff(2, Poly3(1));
    PowerSeries d = t2.derive();
    CHECK(d.coeff(1) == Poly3(2));
    CHECK(d.order() == 3);
    // g = (e^t-1)/t has g'(0) = 1/2
    CHECK(expm1_over_t(5).derive().coeff(0) == Poly3(Rational(1, 2)));
}

TEST_CASE("bessel-tricomi factor") {
    PowerSeries c0 = build_c0(3, 7);
    Poly3 x = Poly3::variable(Var::x);
    CHECK(c0.coeff(0) == Poly3(1));
    CHECK(c0.coeff(3) == x);
    CHECK(c0.coeff(6) == Rational(1, 4) * (x * x));
    for (int k : {1, 2, 4, 5, 7})
        CHECK(c0.coeff(k).is_zero());

    PowerSeries c1 = build_c0(1, 2);
    CHECK(c1.coeff(0) == Poly3(1));
    CHECK(c1.coeff(1) == x);
    CHECK(c1.coeff(2) == Rational(1, 4) * (x * x));

    CHECK(build_c0(4, 9).coeff(0) == Poly3(1));
}

TEST_CASE("egf coefficient extraction") {
    PowerSeries yt(5);
    yt.set_coeff(1, Poly3::variable(Var::y));
    PowerSeries e = yt.exp();
    CHECK(egf_coeff(e, 3) == Poly3::variable(Var::y).pow(3));
    CHECK(egf_coeff(e, 0) == Poly3(1));
    CHECK_THROWS_AS(egf_coeff(e, 6), IndexBeyondOrder);
}

TEST_CASE("algebraic properties on random series") {
    std::mt19937 rng(2025);
    for (int i = 0; i < 15; ++i) {
        PowerSeries a = random_scalar_series(rng, 8, true);
        CHECK(a * a.recip() == PowerSeries::one(8));

        PowerSeries u = random_scalar_series(rng, 6, false);
        PowerSeries v = random_scalar_series(rng, 6, false);
        CHECK(u.exp() * v.exp() == (u + v).exp());
        CHECK(u.exp().derive() == u.derive() * u.exp());
    }
}

TEST_CASE("egf coefficients of exp(yt) times a scalar series convolve binomially") {
    std::mt19937 rng(99);
    PowerSeries s = random_scalar_series(rng, 6, true);
    PowerSeries yt(6);
    yt.set_coeff(1, Poly3::variable(Var::y));
    PowerSeries prod = yt.exp() * s;
    for (int n = 0; n <= 6; ++n) {
        Poly3 expect;
        for (int k = 0; k <= n; ++k) {
            Rational c = Rational::binomial(n, k) * Rational::factorial(n - k) *
                         s.coeff(n - k).constant_term();
            expect += Poly3(Monomial{0, k, 0}, c);
        }
        CHECK(egf_coeff(prod, n) == expect);
    }
}

} // TEST_SUITE
