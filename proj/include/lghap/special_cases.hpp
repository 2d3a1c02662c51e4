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

#ifndef LGHAP_SPECIAL_CASES_HPP
#define LGHAP_SPECIAL_CASES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lghap/appell.hpp"
#include "lghap/lgh.hpp"
#include "lghap/poly.hpp"

namespace lghap {

/// Reduction rows realizable by plain variable substitution. T1 rows
/// reduce the LGH polynomial itself; T2 rows reduce its Appell-based
/// extension and therefore carry a family. Rows whose substitutions are
/// operator-valued (e.g. y -> -Dx^-1 or z -> y d/dy y) are rejected with
/// UnsupportedCase so that the coverage gap is machine-visible.
enum class CaseId {
    T1_I,    // m=1, r=2; x -> -x            3-variable Laguerre-Hermite
    T1_II,   // m=1, r=2; z = -1/2, x -> -x  2-variable Laguerre-Hermite
    T1_III,  // m=1, r=2; y = 1, z -> y, x -> -x
    T1_IV,   // x = 0                        Gould-Hopper
    T1_V,    // z = 0                        2-variable generalized Laguerre
    T1_VII,  // r = m-1; x = 0, y -> x, z -> y   generalized Chebyshev
    T1_VIII, // m = 1; z = 0, x -> -x        2-variable Laguerre
    T1_XI,   // r = 2; x = 0                 Hermite-Kampe de Feriet
    T1_XIII, // m = 2; z = 0, x -> (x^2-1)/4, y -> x   Legendre
    T2_IV,   // x = 0 on the Appell-based family       GHAP
    T2_V,    // z = 0 on the Appell-based family       2VGLAP
};

/// Parses identifiers like "T1-IV" or "T2-V". Operator-valued rows
/// (T1-VI, IX, X, XII, XIV, XV and the T2 counterparts) raise
/// UnsupportedCase; anything else raises InvalidParameter.
CaseId parse_case_id(std::string_view text);

const char* case_name(CaseId id);

struct ReductionCase {
    CaseId id;
    LghParams params;                   // effective indices after constraints
    std::optional<AppellFamily> family; // T2 rows only
    // Substitutions applied to (x, y, z) simultaneously.
    Poly3 rx, ry, rz;
};

/// Builds a case from requested indices. Rows that pin an index override
/// the request (T1-I pins m=1, r=2; T1-XIII pins m=2; T1-XI pins r=2;
/// T1-VII pins r = m-1 and needs m >= 2; T1-VIII pins m=1). T2 rows
/// require a family.
ReductionCase make_case(CaseId id, int m, int r,
                        const std::optional<AppellFamily>& family = std::nullopt);

/// lghp (or lghap_series for T2 rows) of degree n with the case's
/// substitutions applied.
Poly3 reduce(const ReductionCase& c, int n);

/// Legendre polynomial P_n by the Bonnet three-term recurrence
/// (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}; the independent oracle for
/// the T1-XIII reduction.
Poly3 legendre_oracle(int n);

/// 2-variable Hermite-Kampe de Feriet polynomial H_n(y, z) = ghp(2, n);
/// named oracle for T1-XI.
Poly3 hermite_kdf_oracle(int n);

} // namespace lghap

#endif // LGHAP_SPECIAL_CASES_HPP
