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

#include "classic_tables.hpp"
#include "lghap/appell.hpp"
#include "lghap/errors.hpp"

using namespace lghap;

TEST_SUITE("appell") {

TEST_CASE("family specs parse and validate") {
    CHECK(make_family("bernoulli").a0() == Rational(1));
    CHECK(make_family("bernoulli").is_egf());
    CHECK(make_family("miller-lee:s=0").normalization() == Normalization::ogf_base);

    // lambda = 1 Apostol-Euler collapses to Euler
    PowerSeries ae = make_family("apostol-euler:alpha=1,lambda=1").a_series(8);
    CHECK(ae == make_family("euler").a_series(8));

    CHECK_THROWS_AS(make_family("bessel"), UnknownFamily);
    CHECK_THROWS_AS(make_family("apostol-euler:lambda=0"), InvalidParameter);
    CHECK_THROWS_AS(make_family("gen-bernoulli:alpha=-2"), InvalidParameter);
    CHECK_THROWS_AS(make_family("miller-lee:s=-2"), InvalidParameter);
    CHECK_THROWS_AS(make_family("gen-euler:alpha=1/2"), InvalidParameter);
    CHECK_THROWS_AS(make_family("modified-laguerre:beta=0"), InvalidParameter);
    CHECK_THROWS_AS(make_family("bernoulli:alpha=2"), InvalidParameter);
    CHECK_THROWS_AS(make_family("miller-lee:s"), InvalidParameter);
}

TEST_CASE("aliases") {
    CHECK(make_family("trunc-exp").spec() == "miller-lee:s=0");
    CHECK(make_family("modified-laguerre:beta=3").spec() == "miller-lee:s=2");
    for (int n = 0; n <= 5; ++n)
        CHECK(make_family("trunc-exp").base_poly(n) == make_family("miller-lee:s=0").base_poly(n));
}

TEST_CASE("A(t) series") {
    PowerSeries b = make_family("bernoulli").a_series(4);
    CHECK(b.coeff(0) == Poly3(1));
    CHECK(b.coeff(1) == Poly3(Rational(-1, 2)));
    CHECK(b.coeff(2) == Poly3(Rational(1, 12)));
    CHECK(b.coeff(3).is_zero());
    CHECK(b.coeff(4) == Poly3(Rational(-1, 720)));

    PowerSeries g = make_family("genocchi").a_series(1);
    CHECK(g.coeff(0).is_zero());
    CHECK(g.coeff(1) == Poly3(1));

    CHECK(make_family("euler").a_series(0).coeff(0) == Poly3(1));
}

TEST_CASE("appell numbers") {
    auto bern = make_family("bernoulli").appell_numbers(4);
    CHECK(bern == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(1, 6), Rational(0),
                                        Rational(-1, 30)});
    auto eul = make_family("euler").appell_numbers(4);
    CHECK(eul == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(0), Rational(1, 4),
                                       Rational(0)});
    CHECK(make_family("genocchi").appell_numbers(0)[0] == Rational(0));
}

TEST_CASE("classical polynomials match the tables") {
    auto bern = make_family("bernoulli");
    auto btab = testutil::bernoulli_table();
    auto eul = make_family("euler");
    auto etab = testutil::euler_table();
    for (int n = 0; n <= 5; ++n) {
        CHECK(bern.appell_poly(n) == btab[n]);
        CHECK(eul.appell_poly(n) == etab[n]);
    }
    CHECK(make_family("gen-euler:alpha=2").appell_poly(0) == Poly3(1));
}

TEST_CASE("base polynomials") {
    auto te = make_family("trunc-exp");
    auto ttab = testutil::trunc_exp_table();
    for (int n = 0; n <= 5; ++n)
        CHECK(te.base_poly(n) == ttab[n]);

    auto gen = make_family("genocchi");
    auto gtab = testutil::genocchi_table();
    for (int n = 0; n <= 5; ++n)
        CHECK(gen.base_poly(n) == gtab[n]);

    CHECK_THROWS_AS(te.appell_poly(2), NormalizationMismatch);
}

TEST_CASE("miller-lee base polynomials sum binomial-weighted powers") {
    // G_n^(s)(y) = sum_k C(s+n-k, n-k) y^k / k!, checked independently.
    for (int s : {0, 1, 3}) {
        auto fam = make_family("miller-lee:s=" + std::to_string(s));
        for (int n = 0; n <= 6; ++n) {
            Poly3 expect;
            for (int k = 0; k <= n; ++k)
                expect += Poly3(Monomial{0, k, 0}, Rational::binomial(s + n - k, n - k) /
                                                       Rational::factorial(k));
            CHECK(fam.base_poly(n) == expect);
        }
    }
    // s = -1 gives A(t) = 1: base polynomial is y^n/n!
    auto flat = make_family("miller-lee:s=-1");
    CHECK(flat.base_poly(3) == Poly3(Monomial{0, 3, 0}, Rational(1, 6)));
}

TEST_CASE("beta coefficients") {
    auto bern = make_family("bernoulli");
    auto beta = bern.beta_coeffs(2);
    CHECK(beta == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3)});
    CHECK(make_family("euler").beta_coeffs(0)[0] == Rational(1));
    CHECK_THROWS_AS(make_family("genocchi").beta_coeffs(3), DegenerateFamily);
}

TEST_CASE("beta recurrence agrees with the series reciprocal") {
    for (const char* spec : {"bernoulli", "euler", "gen-bernoulli:alpha=2",
                             "apostol-euler:alpha=1,lambda=2", "apostol-bernoulli:alpha=2,lambda=1",
                             "gen-euler:alpha=3"}) {
        auto fam = make_family(spec);
        auto beta = fam.beta_coeffs(12);
        PowerSeries g = fam.a_series(12).recip();
        for (int n = 0; n <= 12; ++n)
            CHECK(beta[n] == egf_coeff(g, n).constant_term());
    }
}

TEST_CASE("appell defining property d/dy A_n = n A_{n-1}") {
    for (const char* spec :
         {"bernoulli", "euler", "genocchi", "gen-bernoulli:alpha=2", "apostol-euler:lambda=2"}) {
        auto fam = make_family(spec);
        for (int n = 1; n <= 8; ++n)
            CHECK(fam.appell_poly(n).derive(Var::y) == Rational(n) * fam.appell_poly(n - 1));
    }
}

TEST_CASE("appell polynomial at 0 recovers the appell numbers") {
    for (const char* spec : {"bernoulli", "euler", "genocchi", "apostol-bernoulli:lambda=3"}) {
        auto fam = make_family(spec);
        auto nums = fam.appell_numbers(8);
        for (int n = 0; n <= 8; ++n)
            CHECK(fam.appell_poly(n).eval(Rational(0), Rational(0), Rational(0)) == nums[n]);
    }
}

TEST_CASE("parameter reductions") {
    CHECK(make_family("apostol-bernoulli:alpha=1,lambda=1").a_series(10) ==
          make_family("bernoulli").a_series(10));
    CHECK(make_family("gen-bernoulli:alpha=1").a_series(10) ==
          make_family("bernoulli").a_series(10));
    CHECK(make_family("gen-euler:alpha=1").a_series(10) == make_family("euler").a_series(10));
    // alpha = 0 flattens A(t) to 1
    PowerSeries flat = make_family("gen-bernoulli:alpha=0").a_series(5);
    CHECK(flat == PowerSeries::one(5));
}

TEST_CASE("apostol families with lambda != 1") {
    // A(t) = 2/(2 e^t + 1): A_0 = 2/3
    CHECK(make_family("apostol-euler:alpha=1,lambda=2").a0() == Rational(2, 3));
    // A(t) = t/(2 e^t - 1) has A_0 = 0, so the beta path degenerates
    auto ab = make_family("apostol-bernoulli:alpha=1,lambda=2");
    CHECK(ab.a0() == Rational(0));
    CHECK_THROWS_AS(ab.beta_coeffs(2), DegenerateFamily);
    // but the series itself is regular: [t^1] = 1/(lambda - 1) = 1
    CHECK(ab.a_series(1).coeff(1) == Poly3(1));
}

} // TEST_SUITE
