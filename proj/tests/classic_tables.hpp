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

#ifndef LGHAP_CLASSIC_TABLES_HPP
#define LGHAP_CLASSIC_TABLES_HPP

#include <utility>
#include <vector>

#include "lghap/poly.hpp"

namespace lghap::testutil {

/// Builds a polynomial in y from (power, coefficient) pairs.
inline Poly3 ypoly(const std::vector<std::pair<int, const char*>>& terms) {
    Poly3 p;
    for (const auto& [e, c] : terms)
        p += Poly3(Monomial{0, e, 0}, Rational::parse(c));
    return p;
}

/// First six Bernoulli polynomials B_0..B_5.
inline std::vector<Poly3> bernoulli_table() {
    return {
        ypoly({{0, "1"}}),
        ypoly({{1, "1"}, {0, "-1/2"}}),
        ypoly({{2, "1"}, {1, "-1"}, {0, "1/6"}}),
        ypoly({{3, "1"}, {2, "-3/2"}, {1, "1/2"}}),
        ypoly({{4, "1"}, {3, "-2"}, {2, "1"}, {0, "-1/30"}}),
        ypoly({{5, "1"}, {4, "-5/2"}, {3, "5/3"}, {1, "-1/6"}}),
    };
}

/// First six Euler polynomials E_0..E_5, as forced by A(t) = 2/(e^t+1).
/// Beware: several printed tabulations circulate with corrupted rows for
/// n = 3..5 (constant 1/6 for 1/4, linear 2/3 y for y, 5/3 y^2 for
/// 5/2 y^2); those fail the defining property E_n(0) = A_n.
inline std::vector<Poly3> euler_table() {
    return {
        ypoly({{0, "1"}}),
        ypoly({{1, "1"}, {0, "-1/2"}}),
        ypoly({{2, "1"}, {1, "-1"}}),
        ypoly({{3, "1"}, {2, "-3/2"}, {0, "1/4"}}),
        ypoly({{4, "1"}, {3, "-2"}, {1, "1"}}),
        ypoly({{5, "1"}, {4, "-5/2"}, {2, "5/2"}, {0, "-1/2"}}),
    };
}

/// First six truncated exponential polynomials e_0..e_5.
inline std::vector<Poly3> trunc_exp_table() {
    return {
        ypoly({{0, "1"}}),
        ypoly({{1, "1"}, {0, "1"}}),
        ypoly({{2, "1/2"}, {1, "1"}, {0, "1"}}),
        ypoly({{3, "1/6"}, {2, "1/2"}, {1, "1"}, {0, "1"}}),
        ypoly({{4, "1/24"}, {3, "1/6"}, {2, "1/2"}, {1, "1"}, {0, "1"}}),
        ypoly({{5, "1/120"}, {4, "1/24"}, {3, "1/6"}, {2, "1/2"}, {1, "1"}, {0, "1"}}),
    };
}

/// First six Genocchi polynomials G_0..G_5.
inline std::vector<Poly3> genocchi_table() {
    return {
        Poly3(),
        ypoly({{0, "1"}}),
        ypoly({{1, "2"}, {0, "-1"}}),
        ypoly({{2, "3"}, {1, "-3"}}),
        ypoly({{3, "4"}, {2, "-6"}, {0, "1"}}),
        ypoly({{4, "5"}, {3, "-10"}, {1, "5"}}),
    };
}

/// The four golden degree-4 values at (m, r) = (3, 5), one per worked
/// family: base_4(y) + 24 base_1(y) x.
inline Poly3 golden_bernoulli_35_4() {
    Poly3 p = ypoly({{4, "1"}, {3, "-2"}, {2, "1"}, {0, "-1/30"}});
    p += Poly3(Monomial{1, 1, 0}, Rational(24));
    p += Poly3(Monomial{1, 0, 0}, Rational(-12));
    return p;
}

inline Poly3 golden_euler_35_4() {
    Poly3 p = ypoly({{4, "1"}, {3, "-2"}, {1, "1"}});
    p += Poly3(Monomial{1, 1, 0}, Rational(24));
    p += Poly3(Monomial{1, 0, 0}, Rational(-12));
    return p;
}

inline Poly3 golden_trunc_exp_35_4() {
    Poly3 p = ypoly({{4, "1/24"}, {3, "1/6"}, {2, "1/2"}, {1, "1"}, {0, "1"}});
    p += Poly3(Monomial{1, 1, 0}, Rational(24));
    p += Poly3(Monomial{1, 0, 0}, Rational(24));
    return p;
}

inline Poly3 golden_genocchi_35_4() {
    Poly3 p = ypoly({{3, "4"}, {2, "-6"}, {0, "1"}});
    p += Poly3(Monomial{1, 0, 0}, Rational(24));
    return p;
}

} // namespace lghap::testutil

#endif // LGHAP_CLASSIC_TABLES_HPP
