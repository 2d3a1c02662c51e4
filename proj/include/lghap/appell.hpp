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

#ifndef LGHAP_APPELL_HPP
#define LGHAP_APPELL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lghap/power_series.hpp"

namespace lghap {

/// How a family's base polynomials are normalized. `egf` families carry
/// t^n/n! on the right-hand side of the generating function and enjoy
/// the full Appell calculus. `ogf_base` marks the Miller-Lee /
/// truncated-exponential / modified-Laguerre branch, whose classical
/// base polynomials are ordinary-GF values [t^n] A(t) e^(yt); for those
/// only the base polynomials and the series template apply, and the
/// EGF-side cross-checks are skipped.
enum class Normalization { egf, ogf_base };

/// A named Appell sequence, defined by its A(t) series builder.
///
/// Registered families and their A(t):
///   bernoulli              t/(e^t - 1)
///   euler                  2/(e^t + 1)
///   genocchi               2t/(e^t + 1)          (A0 = 0: degenerate for
///                                                 beta/determinant paths)
///   gen-bernoulli:alpha=a  (t/(e^t - 1))^a
///   gen-euler:alpha=a      (2/(e^t + 1))^a
///   apostol-bernoulli:alpha=a,lambda=l   (t/(l e^t - 1))^a
///   apostol-euler:alpha=a,lambda=l       (2/(l e^t + 1))^a
///   miller-lee:s=s         1/(1 - t)^(s+1)       (ogf_base)
///   trunc-exp              alias of miller-lee:s=0
///   modified-laguerre:beta=b  alias of miller-lee:s=b-1
class AppellFamily {
public:
    /// Parses a family-spec string: name[:key=value[,key=value]*].
    /// Keys: alpha (nonnegative integer), lambda (nonzero rational),
    /// s (integer >= -1), beta (positive integer). Throws UnknownFamily or
    /// InvalidParameter.
    static AppellFamily parse(std::string_view spec);

    /// Canonical spec string, e.g. "apostol-euler:alpha=1,lambda=2".
    const std::string& spec() const { return spec_; }

    Normalization normalization() const { return normalization_; }
    bool is_egf() const { return normalization_ == Normalization::egf; }

    /// A(t) mod t^(order+1), exact rational coefficients.
    PowerSeries a_series(int order) const;

    /// Appell numbers A_0..A_nmax, A_k = k! [t^k] A(t).
    std::vector<Rational> appell_numbers(int nmax) const;

    /// Classical Appell polynomial A_n(y) = sum C(n,k) A_k y^(n-k).
    /// EGF families only; throws NormalizationMismatch otherwise.
    Poly3 appell_poly(int n) const;

    /// Base polynomial used by the series template. Identical to
    /// appell_poly for EGF families; for the ordinary-GF branch it is
    /// the ordinary-GF value [t^n] A(t) e^(yt) (e.g. the truncated
    /// exponential e_n(y) = sum_{k<=n} y^k/k!).
    Poly3 base_poly(int n) const;

    /// beta_0..beta_nmax of the determinantal construction:
    /// beta_0 = 1/A_0, beta_n = -(1/A_0) sum_{k=1..n} C(n,k) A_k beta_{n-k}.
    /// Throws DegenerateFamily when A_0 = 0.
    std::vector<Rational> beta_coeffs(int nmax) const;

    Rational a0() const;

private:
    enum class Kind {
        bernoulli,
        euler,
        genocchi,
        miller_lee,
        gen_bernoulli,
        gen_euler,
        apostol_bernoulli,
        apostol_euler,
    };

    AppellFamily(Kind kind, int alpha, Rational lambda, int s);

    Kind kind_;
    int alpha_ = 1;
    Rational lambda_ = Rational(1);
    int s_ = 0;
    Normalization normalization_ = Normalization::egf;
    std::string spec_;
};

inline AppellFamily make_family(std::string_view spec) {
    return AppellFamily::parse(spec);
}

/// Names accepted by make_family, in listing order.
const std::vector<std::string>& family_names();

} // namespace lghap

#endif // LGHAP_APPELL_HPP
