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

#ifndef LGHAP_OPERATORS_HPP
#define LGHAP_OPERATORS_HPP

#include <vector>

#include "lghap/appell.hpp"
#include "lghap/lgh.hpp"
#include "lghap/poly.hpp"

namespace lghap {

/// Truncated series in the derivative operator:
/// sum_k c_k d^k/dy^k. Applying it to a polynomial of y-degree d is exact
/// whenever the truncation order is at least d, because higher derivatives
/// annihilate the polynomial.
class DiffOpSeries {
public:
    explicit DiffOpSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_[k]; }

    Poly3 apply(const Poly3& q) const;

private:
    std::vector<Rational> c_;
};

/// Multiplicative operator of the LGH family:
///   y + m Dx^-1 d^(m-1)/dy^(m-1) + r z d^(r-1)/dy^(r-1).
/// Iterating it from 1 generates the lghp sequence.
Poly3 apply_M_lgh(const LghParams& p, const Poly3& q);

/// Derivative operator of both families (d/dy).
Poly3 apply_P_lgh(const Poly3& q);

/// Coefficients of g'(t)/g(t) with g = 1/A, reinterpreted as a series in
/// d/dy. Throws DegenerateFamily when A_0 = 0.
DiffOpSeries gog_series(const AppellFamily& f, int order);

/// Multiplicative operator of the Appell-based family:
/// apply_M_lgh minus g'(del_y)/g(del_y), truncated at the y-degree of q
/// (which makes the application exact).
Poly3 apply_M_lgha(const AppellFamily& f, const LghParams& p, const Poly3& q);

/// Residual of the LGH differential equation
///   (m d^m/dy^m + r z d^(r+1)/(dx dy^r) + y d^2/(dx dy) - n d/dx) q;
/// identically zero iff q is the n-th lghp.
Poly3 ode_residual_lghp(const LghParams& p, int n, const Poly3& q);

/// Residual of the Appell-based differential equation
///   (y d/dy + m Dx^-1 d^m/dy^m + r z d^r/dy^r - (g'/g)(d/dy) d/dy - n) q.
Poly3 ode_residual_lghap(const AppellFamily& f, const LghParams& p, int n, const Poly3& q);

/// The x-side factor of an exponential operator exp(Omega d^stride/dy^stride).
enum class XAction {
    none,        // Omega = 1
    inv_derive_x, // Omega = Dx^-1
    multiply_z,  // Omega = multiplication by z
};

/// Finite sum sum_k Omega^k d^(stride*k)/dy^(stride*k) q / k!; exact
/// because the derivatives eventually annihilate q.
Poly3 exp_op_apply(XAction action, int stride, const Poly3& q);

/// Checks the Crofton-type identity
///   f(y + m lambda d^(m-1)/dy^(m-1)){1} = exp(lambda d^m/dy^m){f(y)}
/// for a univariate f in y, by expanding both sides.
bool crofton_check(const Poly3& fy, const Rational& lambda, int m);

/// P(M q) - M(P q) - q for the LGH operator pair; identically zero for
/// every polynomial.
Poly3 commutator_check(const LghParams& p, const Poly3& q);

} // namespace lghap

#endif // LGHAP_OPERATORS_HPP
