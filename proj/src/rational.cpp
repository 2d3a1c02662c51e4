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

#include "lghap/rational.hpp"

#include <cctype>

namespace lghap {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw InvalidParameter("bad rational literal '" + std::string(text) +
                               "' (expected p/q or integer)");
    if (num.front() == '+')
        num.remove_prefix(1); // mpz_set_str accepts '-' but not '+'
    if (den.front() == '+')
        den.remove_prefix(1);
    mpz_class n{std::string(num)};
    mpz_class d{std::string(den)};
    if (sgn(d) == 0)
        throw InvalidParameter("bad rational literal '" + std::string(text) +
                               "' (zero denominator)");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(r.v_.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    // num and den are coprime, so their powers are too: already canonical.
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

    // Round num*scale/den half-to-even via floor quotient and remainder.
    mpz_class scaled = num() * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den().get_mpz_t());
    int cmp = ::cmp(r * 2, den());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    bool neg = sgn(q) < 0;
    mpz_class a = ::abs(q);
    mpz_class ipart = a / scale;
    std::string out = neg ? "-" : "";
    out += ipart.get_str();
    if (digits > 0) {
        std::string frac = mpz_class(a % scale).get_str();
        out += '.';
        out += std::string(digits - frac.size(), '0');
        out += frac;
    }
    return out;
}

} // namespace lghap
