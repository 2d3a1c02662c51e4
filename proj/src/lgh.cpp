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

#include "lghap/lgh.hpp"

#include "lghap/errors.hpp"

namespace lghap {

LghParams::LghParams(int m_, int r_) : m(m_), r(r_) {
    if (m < 1 || r < 1)
        throw InvalidParameter("indices m and r must be integers >= 1");
}

Poly3 lghp(const LghParams& p, int n) {
    if (n < 0)
        throw InvalidParameter("degree n must be nonnegative");
    Rational nfac = Rational::factorial(n);
    Poly3 out;
    for (int k = 0; p.r * k <= n; ++k) {
        Rational kfac = Rational::factorial(k);
        for (int l = 0; p.r * k + p.m * l <= n; ++l) {
            int rest = n - p.r * k - p.m * l;
            Rational lfac = Rational::factorial(l);
            Rational c = nfac / (kfac * lfac * lfac * Rational::factorial(rest));
            out += Poly3(Monomial{l, rest, k}, c);
        }
    }
    return out;
}

Poly3 ghp(int r, int n) {
    if (n < 0 || r < 1)
        throw InvalidParameter("ghp needs n >= 0 and r >= 1");
    Rational nfac = Rational::factorial(n);
    Poly3 out;
    for (int k = 0; r * k <= n; ++k) {
        Rational c = nfac / (Rational::factorial(k) * Rational::factorial(n - r * k));
        out += Poly3(Monomial{0, n - r * k, k}, c);
    }
    return out;
}

Poly3 glp(int m, int n) {
    if (n < 0 || m < 1)
        throw InvalidParameter("glp needs n >= 0 and m >= 1");
    Rational nfac = Rational::factorial(n);
    Poly3 out;
    for (int l = 0; m * l <= n; ++l) {
        Rational lfac = Rational::factorial(l);
        out += Poly3(Monomial{l, n - m * l, 0}, nfac / (lfac * lfac * Rational::factorial(n - m * l)));
    }
    return out;
}

Poly3 lghap_series(const AppellFamily& f, const LghParams& p, int n) {
    if (n < 0)
        throw InvalidParameter("degree n must be nonnegative");
    // Base polynomials down from degree n, fetched once per degree.
    std::vector<Poly3> base(n + 1);
    for (int j = 0; j <= n; ++j)
        base[j] = f.base_poly(j);

    Rational nfac = Rational::factorial(n);
    Poly3 out;
    for (int l = 0; p.r * l <= n; ++l) {
        Rational lfac = Rational::factorial(l);
        for (int k = 0; p.r * l + p.m * k <= n; ++k) {
            int rest = n - p.r * l - p.m * k;
            Rational kfac = Rational::factorial(k);
            Rational c = nfac / (lfac * kfac * kfac * Rational::factorial(rest));
            out += c * (Poly3(Monomial{k, 0, l}, Rational(1)) * base[rest]);
        }
    }
    return out;
}

Poly3 lghap_binomial(const AppellFamily& f, const LghParams& p, int n) {
    if (!f.is_egf())
        throw NormalizationMismatch("binomial convolution needs an EGF-normalized family");
    std::vector<Rational> a = f.appell_numbers(n);
    Poly3 out;
    for (int k = 0; k <= n; ++k)
        out += (Rational::binomial(n, k) * a[k]) * lghp(p, n - k);
    return out;
}

Poly3 lghap_gf(const AppellFamily& f, const LghParams& p, int n) {
    if (!f.is_egf())
        throw NormalizationMismatch("generating-function route needs an EGF-normalized family");
    PowerSeries product = f.a_series(n) * build_c0(p.m, n) * build_exp_yz(p.r, n);
    return egf_coeff(product, n);
}

} // namespace lghap
