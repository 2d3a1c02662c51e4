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

#ifndef LGHAP_TEST_UTIL_HPP
#define LGHAP_TEST_UTIL_HPP

#include <random>

#include "lghap/poly.hpp"

namespace lghap::testutil {

/// Deterministic random polynomial: up to `terms` monomials of total
/// degree <= deg with small rational coefficients.
inline Poly3 random_poly(std::mt19937& rng, int deg, int terms = 6) {
    std::uniform_int_distribution<int> edist(0, deg);
    std::uniform_int_distribution<int> cdist(-9, 9);
    std::uniform_int_distribution<int> ddist(1, 4);
    Poly3 p;
    for (int t = 0; t < terms; ++t) {
        int ex = edist(rng);
        int ey = edist(rng);
        int ez = edist(rng);
        if (ex + ey + ez > deg)
            continue;
        p += Poly3(Monomial{ex, ey, ez}, Rational(cdist(rng), ddist(rng)));
    }
    return p;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> cdist(-9, 9);
    std::uniform_int_distribution<int> ddist(1, 4);
    return Rational(cdist(rng), ddist(rng));
}

} // namespace lghap::testutil

#endif // LGHAP_TEST_UTIL_HPP
