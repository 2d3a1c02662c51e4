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

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cli_detail.hpp"
#include "lghap/determinant.hpp"
#include "lghap/errors.hpp"
#include "lghap/operators.hpp"
#include "lghap/special_cases.hpp"

namespace lghap::cli {

namespace {

enum class Method { series, gf, det, op, ode };
constexpr std::array<Method, 5> kAllMethods = {Method::series, Method::gf, Method::det, Method::op,
                                               Method::ode};

const char* method_name(Method m) {
    switch (m) {
    case Method::series: return "series";
    case Method::gf: return "gf";
    case Method::det: return "det";
    case Method::op: return "op";
    case Method::ode: return "ode";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    for (Method m : kAllMethods)
        if (name == method_name(m))
            return m;
    throw InvalidParameter("unknown verify method '" + name +
                           "' (expected series, gf, det, op or ode)");
}

enum class Status { pass, fail, skip };

// Statuses of the requested methods for one (family, n) cell.
struct CellResult {
    std::array<Status, 5> status{};
};

// Every check in a cell compares an independently constructed polynomial
// against the series definition, or tests a residual for zero. Cells are
// pure and share no state, so the verify loop may run them in parallel.
CellResult run_cell(const AppellFamily& fam, const LghParams& p, int n,
                    const std::vector<Method>& methods) {
    CellResult res;
    Poly3 baseline = lghap_series(fam, p, n);
    bool egf = fam.is_egf();
    bool invertible = egf && !fam.a0().is_zero();

    for (size_t mi = 0; mi < methods.size(); ++mi) {
        switch (methods[mi]) {
        case Method::series:
            res.status[mi] = !egf                ? Status::skip
                             : lghap_binomial(fam, p, n) == baseline ? Status::pass
                                                                     : Status::fail;
            break;
        case Method::gf:
            res.status[mi] = !egf ? Status::skip
                             : lghap_gf(fam, p, n) == baseline ? Status::pass
                                                               : Status::fail;
            break;
        case Method::det:
            res.status[mi] = !invertible ? Status::skip
                             : lghap_det(fam, p, n) == baseline ? Status::pass
                                                                : Status::fail;
            break;
        case Method::op: {
            if (!egf) {
                res.status[mi] = Status::skip;
                break;
            }
            Poly3 from_appell = exp_op_apply(
                XAction::inv_derive_x, p.m,
                exp_op_apply(XAction::multiply_z, p.r, fam.appell_poly(n)));
            Poly3 from_z0 = exp_op_apply(XAction::multiply_z, p.r,
                                         baseline.substitute(Var::z, Poly3()));
            Poly3 from_x0 = exp_op_apply(XAction::inv_derive_x, p.m,
                                         baseline.substitute(Var::x, Poly3()));
            bool ok = from_appell == baseline && from_z0 == baseline && from_x0 == baseline;
            res.status[mi] = ok ? Status::pass : Status::fail;
            break;
        }
        case Method::ode:
            res.status[mi] = !invertible ? Status::skip
                             : ode_residual_lghap(fam, p, n, baseline).is_zero() ? Status::pass
                                                                                 : Status::fail;
            break;
        }
    }
    return res;
}

struct CaseCheck {
    std::string label;
    Status status = Status::pass;
    int fail_n = -1;
};

Poly3 convolution_oracle(const AppellFamily& fam, int n, bool gould_hopper, const LghParams& p) {
    std::vector<Rational> a = fam.appell_numbers(n);
    Poly3 out;
    for (int k = 0; k <= n; ++k) {
        Poly3 base = gould_hopper ? ghp(p.r, n - k) : glp(p.m, n - k);
        out += (Rational::binomial(n, k) * a[k]) * base;
    }
    return out;
}

Poly3 case_oracle(const ReductionCase& c, int n) {
    switch (c.id) {
    case CaseId::T1_I:
        return lghp(c.params, n).substitute(Var::x, -Poly3::variable(Var::x));
    case CaseId::T1_II:
        return lghp(c.params, n)
            .substitute(Var::x, -Poly3::variable(Var::x))
            .substitute(Var::z, Poly3(Rational(-1, 2)));
    case CaseId::T1_III:
        // y must be pinned before z -> y, or the renamed z would be hit too.
        return lghp(c.params, n)
            .substitute(Var::x, -Poly3::variable(Var::x))
            .substitute(Var::y, Poly3(Rational(1)))
            .substitute(Var::z, Poly3::variable(Var::y));
    case CaseId::T1_IV:
        return ghp(c.params.r, n);
    case CaseId::T1_V:
        return glp(c.params.m, n);
    case CaseId::T1_VII:
        // Gould-Hopper H_n^(m-1) with (y, z) renamed to (x, y).
        return ghp(c.params.r, n).substitute_all(Poly3::variable(Var::x),
                                                 Poly3::variable(Var::x),
                                                 Poly3::variable(Var::y));
    case CaseId::T1_VIII:
        return glp(1, n).substitute(Var::x, -Poly3::variable(Var::x));
    case CaseId::T1_XI:
        return hermite_kdf_oracle(n);
    case CaseId::T1_XIII:
        return legendre_oracle(n);
    case CaseId::T2_IV:
        return convolution_oracle(*c.family, n, true, c.params);
    case CaseId::T2_V:
        return convolution_oracle(*c.family, n, false, c.params);
    }
    throw Error("unreachable case id");
}

} // namespace

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    if (opt.nmax < 0)
        throw InvalidParameter("n-max must be nonnegative");
    if (opt.families.empty())
        throw InvalidParameter("verify needs at least one family");

    std::vector<Method> methods;
    for (const auto& name : opt.methods)
        methods.push_back(parse_method(name));
    if (methods.empty())
        throw InvalidParameter("verify needs at least one method");

    std::vector<AppellFamily> families;
    for (const auto& spec : opt.families)
        families.push_back(make_family(spec));
    LghParams p(opt.m, opt.r);

    // One cell per (family, n); results are written into a pre-sized
    // array so the report is identical for any thread count.
    int per_family = opt.nmax + 1;
    int total = static_cast<int>(families.size()) * per_family;
    std::vector<CellResult> cells(total);

#ifdef _OPENMP
    int jobs = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (int idx = 0; idx < total; ++idx) {
        int fi = idx / per_family;
        int n = idx % per_family;
        cells[idx] = run_cell(families[fi], p, n, methods);
    }

    // Reduction cases run serially; they are cheap.
    std::vector<CaseCheck> case_checks;
    for (const auto& case_id : opt.cases) {
        CaseId id = parse_case_id(case_id);
        bool is_t2 = id == CaseId::T2_IV || id == CaseId::T2_V;
        std::vector<std::optional<AppellFamily>> fams;
        if (is_t2) {
            for (const auto& f : families)
                if (f.is_egf())
                    fams.emplace_back(f);
            if (fams.empty())
                throw InvalidParameter("case " + case_id + " needs an EGF family in --families");
        } else {
            fams.emplace_back(std::nullopt);
        }
        for (const auto& fam : fams) {
            ReductionCase c = make_case(id, opt.m, opt.r, fam);
            CaseCheck check;
            check.label = std::string("case ") + case_name(id) +
                          (fam ? "[" + fam->spec() + "]" : "");
            for (int n = 0; n <= opt.nmax; ++n) {
                if (reduce(c, n) != case_oracle(c, n)) {
                    check.status = Status::fail;
                    check.fail_n = n;
                    break;
                }
            }
            case_checks.push_back(std::move(check));
        }
    }

    // Report.
    int pass = 0, fail = 0, skip = 0;
    std::ostringstream table;
    table << std::left << std::setw(34) << "family";
    for (Method m : methods)
        table << std::setw(8) << method_name(m);
    table << "\n";

    std::ostringstream detail;
    for (size_t fi = 0; fi < families.size(); ++fi) {
        table << std::setw(34) << families[fi].spec();
        for (size_t mi = 0; mi < methods.size(); ++mi) {
            bool any_fail = false, all_skip = true;
            int first_fail = -1;
            for (int n = 0; n <= opt.nmax; ++n) {
                Status s = cells[fi * per_family + n].status[mi];
                if (s != Status::skip)
                    all_skip = false;
                if (s == Status::fail && !any_fail) {
                    any_fail = true;
                    first_fail = n;
                }
                (s == Status::pass ? pass : s == Status::fail ? fail : skip) += 1;
            }
            if (any_fail) {
                table << std::setw(8) << "FAIL";
                detail << "fail: " << families[fi].spec() << " " << method_name(methods[mi])
                       << " first at n=" << first_fail << "\n";
            } else {
                table << std::setw(8) << (all_skip ? "SKIP" : "PASS");
            }
        }
        table << "\n";
    }
    for (const auto& check : case_checks) {
        if (check.label.size() >= 34)
            table << check.label << ' ';
        else
            table << std::setw(34) << check.label;
        if (check.status == Status::fail) {
            table << "FAIL";
            detail << "fail: " << check.label << " first at n=" << check.fail_n << "\n";
            ++fail;
        } else {
            table << "PASS";
            ++pass;
        }
        table << "\n";
    }

    out << table.str();
    out << detail.str();
    out << "checks: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    out << "result: " << (fail == 0 ? "PASS" : "FAIL") << "\n";
    return fail == 0 ? 0 : 1;
}

} // namespace lghap::cli
