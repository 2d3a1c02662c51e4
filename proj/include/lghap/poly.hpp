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

#ifndef LGHAP_POLY_HPP
#define LGHAP_POLY_HPP

#include <map>
#include <string>

#include "lghap/rational.hpp"

namespace lghap {

enum class Var { x, y, z };

const char* var_name(Var v);

/// Power product x^ex * y^ey * z^ez.
struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    int degree() const { return ex + ey + ez; }
    int exponent(Var v) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ex == b.ex && a.ey == b.ey && a.ez == b.ez;
    }
};

/// Canonical term order: total degree descending, ties by y power, then
/// x power, then z power, all descending. This is the order every text
/// and JSON rendering uses, so output is deterministic and diffable
/// (e.g. y^2 sorts before x*y, and x before z).
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        if (a.ey != b.ey)
            return a.ey > b.ey;
        if (a.ex != b.ex)
            return a.ex > b.ex;
        return a.ez > b.ez;
    }
};

/// Sparse polynomial in x, y, z with exact rational coefficients.
/// Always canonical: no stored coefficient is zero, so equality of the
/// term maps is equality of polynomials. Values are immutable in spirit:
/// every operation returns a fresh polynomial.
class Poly3 {
public:
    using TermMap = std::map<Monomial, Rational, TermOrder>;

    Poly3() = default;
    Poly3(const Rational& c); // NOLINT: constants convert implicitly
    Poly3(long c) : Poly3(Rational(c)) {}
    Poly3(const Monomial& m, const Rational& c);

    static Poly3 variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial (zero when absent).
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;

    int degree() const;
    int degree_in(Var v) const;

    const TermMap& terms() const { return terms_; }

    Poly3 operator-() const;
    Poly3& operator+=(const Poly3& o);
    Poly3& operator-=(const Poly3& o);
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(const Rational& c, const Poly3& p);

    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

    Poly3 pow(int e) const;

    Rational eval(const Rational& x0, const Rational& y0, const Rational& z0) const;

    /// k-th partial derivative; k = 0 returns the polynomial unchanged.
    Poly3 derive(Var v, int k = 1) const;

    /// k applications of the inverse derivative in x: termwise
    /// x^a -> x^(a+1)/(a+1), zero integration constant. Normalized so
    /// that k applications to 1 give x^k/k!.
    Poly3 inv_derive_x(int k = 1) const;

    /// Replaces every power of `v` by the matching power of `q`.
    Poly3 substitute(Var v, const Poly3& q) const;

    /// Simultaneous substitution of all three variables (used by the
    /// reduction table, where renames like y->x, z->y would collide if
    /// applied one at a time).
    Poly3 substitute_all(const Poly3& rx, const Poly3& ry, const Poly3& rz) const;

    /// Canonical text form, e.g. "y^4 - 2*y^3 + y^2 + 24*x*y - 12*x - 1/30".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

} // namespace lghap

#endif // LGHAP_POLY_HPP
