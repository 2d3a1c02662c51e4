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

#ifndef LGHAP_CLI_DETAIL_HPP
#define LGHAP_CLI_DETAIL_HPP

#include <ostream>
#include <string>
#include <vector>

#include "lghap/lgh.hpp"

namespace lghap::cli {

struct VerifyOptions {
    std::vector<std::string> families;
    int m = 1;
    int r = 1;
    int nmax = 0;
    std::vector<std::string> methods; // subset of series,gf,det,op,ode
    std::vector<std::string> cases;   // reduction ids like T1-IV
    int jobs = 0;                     // 0 = library default thread count
};

/// Cross-verifies the selected routes against the series definition and
/// the selected reduction cases against their oracles. Returns 0 when
/// every check passes, 1 otherwise. Cells are independent and may be
/// evaluated in parallel; the printed report does not depend on the
/// thread count.
int run_verify(const VerifyOptions& opt, std::ostream& out);

struct BenchOptions {
    std::string family;
    int m = 1;
    int r = 1;
    int nmax = 0;
};

/// Wall-time comparison of the series, generating-function and
/// determinant evaluation routes (cofactor determinant capped at n = 6).
int run_bench(const BenchOptions& opt, std::ostream& out);

} // namespace lghap::cli

#endif // LGHAP_CLI_DETAIL_HPP
