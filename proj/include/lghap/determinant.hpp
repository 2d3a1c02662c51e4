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

#ifndef LGHAP_DETERMINANT_HPP
#define LGHAP_DETERMINANT_HPP

#include <vector>

#include "lghap/appell.hpp"
#include "lghap/lgh.hpp"
#include "lghap/poly.hpp"

namespace lghap {

/// Upper Hessenberg matrix of polynomials: entries (i, j) with i >= j + 2
/// are zero. Row 0 is the polynomial row; rows 1..n carry beta_0 on the
/// subdiagonal and binomial-weighted betas above it.
class HessMatrix {
public:
    explicit HessMatrix(int dim) : dim_(dim), e_(dim, std::vector<Poly3>(dim)) {}

    int dim() const { return dim_; }
    const Poly3& at(int i, int j) const { return e_[i][j]; }
    void set(int i, int j, Poly3 v) { e_[i][j] = std::move(v); }

    bool is_hessenberg() const;

private:
    int dim_;
    std::vector<std::vector<Poly3>> e_;
};

/// The (n+1) x (n+1) matrix whose scaled determinant is the n-th
/// Appell-based LGH polynomial: first row [1, LH_1, ..., LH_n], row i
/// entries C(j, i-1) beta_{j-i+1}. Throws DegenerateFamily when A_0 = 0.
HessMatrix build_lghap_matrix(const AppellFamily& f, const LghParams& p, int n);

/// Same layout with first row [1, y, y^2, ..., y^n] for the classical
/// Appell polynomial.
HessMatrix build_appell_matrix(const AppellFamily& f, int n);

/// Exact determinant by the last-column Hessenberg expansion
///   d_k = sum_{i<=k} (-1)^(k-i) e[i][k] (prod_{j=i..k-1} e[j+1][j]) d_{i-1},
/// d_0 = 1. O(n^2) entry products. Throws ShapeViolation if the matrix is
/// not upper Hessenberg.
Poly3 hess_det(const HessMatrix& mat);

/// First-row cofactor expansion; oracle for hess_det. Guarded to
/// dim <= 8 (factorial cost); throws DimensionTooLarge beyond that.
Poly3 naive_det(const HessMatrix& mat);

/// Classical Appell polynomial via (-1)^n / beta_0^(n+1) times the
/// determinant. Equals appell_poly for every family with A_0 != 0.
Poly3 appell_det(const AppellFamily& f, int n);

/// Appell-based LGH polynomial via the determinant; equals lghap_series
/// for EGF families with A_0 != 0.
Poly3 lghap_det(const AppellFamily& f, const LghParams& p, int n);

} // namespace lghap

#endif // LGHAP_DETERMINANT_HPP
