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

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "cli_detail.hpp"
#include "lghap/determinant.hpp"
#include "lghap/errors.hpp"

namespace lghap::cli {

namespace {

// Mean wall time in microseconds, repeated until the sample is at least
// ~2 ms long (capped) so small-n rows are not pure clock noise.
double time_us(const std::function<void()>& work) {
    using clock = std::chrono::steady_clock;
    auto once = [&] {
        auto t0 = clock::now();
        work();
        auto t1 = clock::now();
        return std::chrono::duration<double, std::micro>(t1 - t0).count();
    };
    double first = once();
    int reps = 1;
    double total = first;
    while (total < 2000.0 && reps < 512) {
        total += once();
        ++reps;
    }
    return total / reps;
}

} // namespace

int run_bench(const BenchOptions& opt, std::ostream& out) {
    if (opt.nmax < 0)
        throw InvalidParameter("n-max must be nonnegative");
    AppellFamily fam = make_family(opt.family);
    if (!fam.is_egf())
        throw InvalidParameter("bench needs an EGF-normalized family");
    if (fam.a0().is_zero())
        throw DegenerateFamily("bench needs A_0 != 0 for the determinant route");
    LghParams p(opt.m, opt.r);

    out << "bench family=" << fam.spec() << " m=" << p.m << " r=" << p.r << "\n";
    out << std::left << std::setw(4) << "n" << std::setw(14) << "series_us" << std::setw(14)
        << "gf_us" << std::setw(14) << "det_us" << std::setw(14) << "naive_us" << "\n";

    for (int n = 0; n <= opt.nmax; ++n) {
        double series_us = time_us([&] { lghap_series(fam, p, n); });
        double gf_us = time_us([&] { lghap_gf(fam, p, n); });
        double det_us = time_us([&] { lghap_det(fam, p, n); });

        std::ostringstream row;
        row << std::left << std::fixed << std::setprecision(2);
        row << std::setw(4) << n << std::setw(14) << series_us << std::setw(14) << gf_us
            << std::setw(14) << det_us;
        if (n <= 6) {
            // Cofactor oracle, cost guard per its dim <= 8 precondition.
            double naive_us = time_us([&] { naive_det(build_lghap_matrix(fam, p, n)); });
            row << std::setw(14) << naive_us;
        } else {
            row << std::setw(14) << "-";
        }
        out << row.str() << "\n";
    }
    return 0;
}

} // namespace lghap::cli
