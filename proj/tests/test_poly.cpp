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

#include <map>
#include <random>
#include <tuple>

#include "classic_tables.hpp"
#include "lghap/poly.hpp"
#include "test_util.hpp"

using namespace lghap;
using lghap::testutil::random_poly;
using lghap::testutil::random_rational;

namespace {

const Poly3 X = Poly3::variable(Var::x);
const Poly3 Y = Poly3::variable(Var::y);
const Poly3 Z = Poly3::variable(Var::z);

// Independent product oracle: plain term-by-term expansion into a fresh
// exponent map, no Poly3 arithmetic involved.
Poly3 naive_mul(const Poly3& a, const Poly3& b) {
    std::map<std::tuple<int, int, int>, Rational> acc;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            acc[{ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez}] += ca * cb;
    Poly3 out;
    for (const auto& [e, c] : acc)
        out += Poly3(Monomial{std::get<0>(e), std::get<1>(e), std::get<2>(e)}, c);
    return out;
}

bool is_canonical(const Poly3& p) {
    for (const auto& [m, c] : p.terms())
        if (c.is_zero())
            return false;
    return true;
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("multiplication") {
    CHECK((Y + Poly3(1)) * (Y - Poly3(1)) == Y * Y - Poly3(1));
    std::mt19937 rng(7);
    Poly3 p = random_poly(rng, 4);
    CHECK(p * Poly3(1) == p);
    // distributivity spot value against the term-by-term oracle
    Poly3 lhs = (Y * Y + Rational(2) * X) * Y;
    CHECK(lhs == naive_mul(Y * Y + Rational(2) * X, Y));
    CHECK(lhs == Y.pow(3) + Rational(2) * (X * Y));
}

TEST_CASE("multiplication matches the oracle on random inputs") {
    std::mt19937 rng(2026);
    for (int i = 0; i < 40; ++i) {
        Poly3 a = random_poly(rng, 5);
        Poly3 b = random_poly(rng, 5);
        CHECK(a * b == naive_mul(a, b));
        CHECK(is_canonical(a * b));
    }
}

TEST_CASE("evaluation") {
    Poly3 g = testutil::golden_bernoulli_35_4();
    CHECK(g.eval(Rational(0), Rational(0), Rational(0)) == Rational(-1, 30));
    CHECK(g.eval(Rational(1), Rational(1), Rational(0)) == Rational(359, 30));
    CHECK(Poly3().eval(Rational(3), Rational(-7, 2), Rational(5)) == Rational(0));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        Poly3 a = random_poly(rng, 4);
        Poly3 b = random_poly(rng, 4);
        Rational x0 = random_rational(rng), y0 = random_rational(rng), z0 = random_rational(rng);
        CHECK((a + b).eval(x0, y0, z0) == a.eval(x0, y0, z0) + b.eval(x0, y0, z0));
        CHECK((a * b).eval(x0, y0, z0) == a.eval(x0, y0, z0) * b.eval(x0, y0, z0));
    }
}

TEST_CASE("partial derivatives") {
    CHECK(Poly3(Rational(5, 3)).derive(Var::y).is_zero());
    CHECK((Rational(24) * (X * Y)).derive(Var::x) == Rational(24) * Y);
    CHECK(testutil::golden_bernoulli_35_4().derive(Var::y, 0) ==
          testutil::golden_bernoulli_35_4());

    // d/dy of the golden degree-4 value is 4 times the degree-3 one:
    // B_3(y) + 6x, by the Appell derivative property.
    Poly3 lghbp3 = testutil::bernoulli_table()[3] + Rational(6) * X;
    CHECK(testutil::golden_bernoulli_35_4().derive(Var::y) == Rational(4) * lghbp3);
}

TEST_CASE("inverse derivative in x") {
    Poly3 one(1);
    for (int k = 0; k <= 6; ++k)
        CHECK(one.inv_derive_x(k) ==
              Poly3(Monomial{k, 0, 0}, Rational(1) / Rational::factorial(k)));
    CHECK(X.inv_derive_x() == Rational(1, 2) * (X * X));
    CHECK((Rational(24) * Y - Poly3(12)).inv_derive_x() ==
          Rational(24) * (X * Y) - Rational(12) * X);
}

TEST_CASE("derivative undoes the inverse derivative") {
    std::mt19937 rng(23);
    for (int i = 0; i < 25; ++i) {
        Poly3 p = random_poly(rng, 8);
        CHECK(p.inv_derive_x().derive(Var::x) == p);
        CHECK(p.inv_derive_x(3).derive(Var::x, 3) == p);
    }
}

TEST_CASE("substitution") {
    Poly3 p = Y * Y + Rational(2) * X + Rational(2) * Z;
    CHECK(p.substitute(Var::x, Poly3()) == Y * Y + Rational(2) * Z);
    CHECK((X * X).substitute(Var::x, -X) == X * X);

    // x -> (x^2-1)/4 in y^2 + 2x, then y -> x, lands on (3x^2-1)/2.
    Poly3 q = (Y * Y + Rational(2) * X)
                  .substitute(Var::x, Rational(1, 4) * (X * X - Poly3(1)))
                  .substitute(Var::y, X);
    CHECK(q == Rational(3, 2) * (X * X) - Poly3(Rational(1, 2)));
}

TEST_CASE("substituting a variable by itself is the identity") {
    std::mt19937 rng(37);
    for (int i = 0; i < 20; ++i) {
        Poly3 p = random_poly(rng, 6);
        CHECK(p.substitute(Var::x, X) == p);
        CHECK(p.substitute(Var::y, Y) == p);
        CHECK(p.substitute(Var::z, Z) == p);
        CHECK(p.substitute_all(X, Y, Z) == p);
    }
}

TEST_CASE("results stay canonical") {
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
        Poly3 a = random_poly(rng, 6);
        Poly3 b = random_poly(rng, 6);
        CHECK(is_canonical(a + b));
        CHECK(is_canonical(a - a)); // exact cancellation leaves no zeros
        CHECK((a - a).is_zero());
        CHECK(is_canonical(a.derive(Var::y, 2)));
        CHECK(is_canonical(a.substitute(Var::z, b)));
    }
}

TEST_CASE("canonical text form") {
    CHECK(Poly3().str() == "0");
    CHECK(Poly3(Rational(-1, 30)).str() == "-1/30");
    CHECK((-Y).str() == "-y");
    CHECK(testutil::golden_bernoulli_35_4().str() ==
          "y^4 - 2*y^3 + y^2 + 24*x*y - 12*x - 1/30");
    CHECK(testutil::golden_euler_35_4().str() == "y^4 - 2*y^3 + 24*x*y + y - 12*x");
    // graded order with ties resolved y, then x, then z
    Poly3 mixed = X + Z + Y + X * Y + Y * Y + X * Z;
    CHECK(mixed.str() == "y^2 + x*y + x*z + y + x + z");
}

} // TEST_SUITE
