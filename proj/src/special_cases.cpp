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

#include "lghap/special_cases.hpp"

#include <map>

#include "lghap/errors.hpp"

namespace lghap {

CaseId parse_case_id(std::string_view text) {
    static const std::map<std::string, CaseId, std::less<>> ids = {
        {"T1-I", CaseId::T1_I},     {"T1-II", CaseId::T1_II},   {"T1-III", CaseId::T1_III},
        {"T1-IV", CaseId::T1_IV},   {"T1-V", CaseId::T1_V},     {"T1-VII", CaseId::T1_VII},
        {"T1-VIII", CaseId::T1_VIII}, {"T1-XI", CaseId::T1_XI}, {"T1-XIII", CaseId::T1_XIII},
        {"T2-IV", CaseId::T2_IV},   {"T2-V", CaseId::T2_V},
    };
    if (auto it = ids.find(text); it != ids.end())
        return it->second;

    static const char* operator_valued[] = {"T1-VI",  "T1-IX", "T1-X",  "T1-XII", "T1-XIV",
                                            "T1-XV",  "T2-VI", "T2-IX", "T2-X",   "T2-XII",
                                            "T2-XIV", "T2-XV"};
    for (const char* ov : operator_valued)
        if (text == ov)
            throw UnsupportedCase("case " + std::string(text) +
                                  " needs an operator-valued substitution "
                                  "(y -> -Dx^-1, x/z -> y d/dy y, ...) and is not representable "
                                  "by polynomial replacement");
    throw InvalidParameter("unknown reduction case '" + std::string(text) + "'");
}

const char* case_name(CaseId id) {
    switch (id) {
    case CaseId::T1_I: return "T1-I";
    case CaseId::T1_II: return "T1-II";
    case CaseId::T1_III: return "T1-III";
    case CaseId::T1_IV: return "T1-IV";
    case CaseId::T1_V: return "T1-V";
    case CaseId::T1_VII: return "T1-VII";
    case CaseId::T1_VIII: return "T1-VIII";
    case CaseId::T1_XI: return "T1-XI";
    case CaseId::T1_XIII: return "T1-XIII";
    case CaseId::T2_IV: return "T2-IV";
    case CaseId::T2_V: return "T2-V";
    }
    return "?";
}

ReductionCase make_case(CaseId id, int m, int r, const std::optional<AppellFamily>& family) {
    const Poly3 X = Poly3::variable(Var::x);
    const Poly3 Y = Poly3::variable(Var::y);
    const Poly3 Z = Poly3::variable(Var::z);
    const Poly3 zero;

    bool is_t2 = id == CaseId::T2_IV || id == CaseId::T2_V;
    if (is_t2 && !family)
        throw InvalidParameter("T2 reduction cases need an Appell family");
    if (!is_t2 && family)
        throw InvalidParameter("T1 reduction cases take no family");

    switch (id) {
    case CaseId::T1_I:
        return {id, LghParams(1, 2), family, -X, Y, Z};
    case CaseId::T1_II:
        return {id, LghParams(1, 2), family, -X, Y, Poly3(Rational(-1, 2))};
    case CaseId::T1_III:
        return {id, LghParams(1, 2), family, -X, Poly3(Rational(1)), Y};
    case CaseId::T1_IV:
        return {id, LghParams(m, r), family, zero, Y, Z};
    case CaseId::T1_V:
        return {id, LghParams(m, r), family, X, Y, zero};
    case CaseId::T1_VII: {
        if (m < 2)
            throw InvalidParameter("case T1-VII needs m >= 2 (it pins r = m-1)");
        return {id, LghParams(m, m - 1), family, zero, X, Y};
    }
    case CaseId::T1_VIII:
        return {id, LghParams(1, r), family, -X, Y, zero};
    case CaseId::T1_XI:
        return {id, LghParams(m, 2), family, zero, Y, Z};
    case CaseId::T1_XIII: {
        // x -> (x^2 - 1)/4, y -> x, z = 0.
        Poly3 quarter = Rational(1, 4) * (X * X - Poly3(Rational(1)));
        return {id, LghParams(2, r), family, quarter, X, zero};
    }
    case CaseId::T2_IV:
        return {id, LghParams(m, r), family, zero, Y, Z};
    case CaseId::T2_V:
        return {id, LghParams(m, r), family, X, Y, zero};
    }
    throw Error("unreachable case id");
}

Poly3 reduce(const ReductionCase& c, int n) {
    Poly3 base = c.family ? lghap_series(*c.family, c.params, n) : lghp(c.params, n);
    return base.substitute_all(c.rx, c.ry, c.rz);
}

Poly3 legendre_oracle(int n) {
    Poly3 p0(Rational(1));
    if (n == 0)
        return p0;
    Poly3 x = Poly3::variable(Var::x);
    Poly3 p1 = x;
    for (int k = 1; k < n; ++k) {
        Poly3 next = (Rational(1) / Rational(k + 1)) *
                     (Rational(2 * k + 1) * (x * p1) - Rational(k) * p0);
        p0 = p1;
        p1 = next;
    }
    return p1;
}

Poly3 hermite_kdf_oracle(int n) {
    return ghp(2, n);
}

} // namespace lghap
