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

#ifndef LGHAP_LGH_HPP
#define LGHAP_LGH_HPP

#include "lghap/appell.hpp"
#include "lghap/poly.hpp"

namespace lghap {

/// Indices (m, r) of the Laguerre-Gould Hopper family; both >= 1. m is
/// the stride of the Laguerre (x) direction, r of the Gould-Hopper (z)
/// direction.
struct LghParams {
    int m = 1;
    int r = 1;

    LghParams(int m_, int r_);
};

/// Laguerre-Gould Hopper polynomial:
///   n! sum_{r*k + m*l <= n} z^k x^l y^(n - r*k - m*l)
///      / (k! (l!)^2 (n - r*k - m*l)!).
Poly3 lghp(const LghParams& p, int n);

/// Gould-Hopper polynomial H_n^(r)(y, z): the x = 0 slice.
Poly3 ghp(int r, int n);

/// 2-variable generalized Laguerre polynomial mL_n(x, y): the z = 0 slice.
Poly3 glp(int m, int n);

/// Appell-based LGH polynomial by the series template:
///   n! sum_{l <= n/r, k <= n/m} base_{n - r*l - m*k}(y) z^l x^k
///      / (l! (k!)^2 (n - r*l - m*k)!),
/// where base is the family's classical Appell polynomial (EGF families)
/// or its ordinary-GF base polynomial (Miller-Lee branch).
Poly3 lghap_series(const AppellFamily& f, const LghParams& p, int n);

/// Same polynomial via the binomial convolution
///   sum_k C(n,k) lghp_{n-k} A_k.  EGF families only.
Poly3 lghap_binomial(const AppellFamily& f, const LghParams& p, int n);

/// Same polynomial via the generating function
///   A(t) C0(-x t^m) exp(y t + z t^r),
/// extracting the coefficient of t^n/n!. Independent of the series
/// template; serves as its oracle. EGF families only.
Poly3 lghap_gf(const AppellFamily& f, const LghParams& p, int n);

} // namespace lghap

#endif // LGHAP_LGH_HPP
