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

#include "lghap/determinant.hpp"

#include "lghap/errors.hpp"

namespace lghap {

bool HessMatrix::is_hessenberg() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j + 2 <= i; ++j)
            if (!e_[i][j].is_zero())
                return false;
    return true;
}

namespace {

HessMatrix build_from_first_row(const std::vector<Poly3>& first_row,
                                const std::vector<Rational>& beta) {
    int dim = static_cast<int>(first_row.size());
    HessMatrix mat(dim);
    for (int j = 0; j < dim; ++j)
        mat.set(0, j, first_row[j]);
    for (int i = 1; i < dim; ++i)
        for (int j = i - 1; j < dim; ++j)
            mat.set(i, j, Poly3(Rational::binomial(j, i - 1) * beta[j - i + 1]));
    return mat;
}

} // namespace

HessMatrix build_lghap_matrix(const AppellFamily& f, const LghParams& p, int n) {
    std::vector<Rational> beta = f.beta_coeffs(n);
    std::vector<Poly3> row;
    row.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        row.push_back(lghp(p, k));
    return build_from_first_row(row, beta);
}

HessMatrix build_appell_matrix(const AppellFamily& f, int n) {
    std::vector<Rational> beta = f.beta_coeffs(n);
    std::vector<Poly3> row;
    row.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        row.push_back(Poly3(Monomial{0, k, 0}, Rational(1)));
    return build_from_first_row(row, beta);
}

Poly3 hess_det(const HessMatrix& mat) {
    if (!mat.is_hessenberg())
        throw ShapeViolation("matrix is not upper Hessenberg");
    int dim = mat.dim();
    // d[k] = determinant of the leading k x k principal submatrix.
    std::vector<Poly3> d(dim + 1);
    d[0] = Poly3(Rational(1));
    for (int k = 1; k <= dim; ++k) {
        Poly3 acc;
        Poly3 subprod(Rational(1));
        int sign = 1;
        for (int i = k; i >= 1; --i) {
            acc += Rational(sign) * (mat.at(i - 1, k - 1) * subprod * d[i - 1]);
            if (i >= 2)
                subprod = subprod * mat.at(i - 1, i - 2);
            sign = -sign;
        }
        d[k] = acc;
    }
    return d[dim];
}

namespace {

Poly3 cofactor_det(const std::vector<std::vector<Poly3>>& a) {
    size_t n = a.size();
    if (n == 1)
        return a[0][0];
    Poly3 acc;
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        if (!a[0][j].is_zero()) {
            std::vector<std::vector<Poly3>> minor(n - 1);
            for (size_t i = 1; i < n; ++i) {
                minor[i - 1].reserve(n - 1);
                for (size_t jj = 0; jj < n; ++jj)
                    if (jj != j)
                        minor[i - 1].push_back(a[i][jj]);
            }
            acc += Rational(sign) * (a[0][j] * cofactor_det(minor));
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

Poly3 naive_det(const HessMatrix& mat) {
    if (mat.dim() > 8)
        throw DimensionTooLarge("cofactor determinant limited to dim <= 8, got " +
                                std::to_string(mat.dim()));
    std::vector<std::vector<Poly3>> a(mat.dim());
    for (int i = 0; i < mat.dim(); ++i)
        for (int j = 0; j < mat.dim(); ++j)
            a[i].push_back(mat.at(i, j));
    return cofactor_det(a);
}

namespace {

Poly3 scaled_det(const HessMatrix& mat, const Rational& beta0, int n) {
    Poly3 det = hess_det(mat);
    Rational pref = Rational(1) / beta0.pow(n + 1);
    if (n % 2 == 1)
        pref = -pref;
    return pref * det;
}

} // namespace

Poly3 appell_det(const AppellFamily& f, int n) {
    return scaled_det(build_appell_matrix(f, n), f.beta_coeffs(0)[0], n);
}

Poly3 lghap_det(const AppellFamily& f, const LghParams& p, int n) {
    return scaled_det(build_lghap_matrix(f, p, n), f.beta_coeffs(0)[0], n);
}

} // namespace lghap
