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

#include "lghap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>

#include "cli_detail.hpp"
#include "lghap/errors.hpp"
#include "lghap/lgh.hpp"

namespace lghap::cli {

namespace {

const char* kGrammar =
    "usage: lghap <subcommand> [options]\n"
    "  expand   --family <spec> --m <int> --r <int> --n <int> [--format text|json]\n"
    "  eval     --family <spec> --m <int> --r <int> --n <int> --at x=<rat>,y=<rat>,z=<rat>\n"
    "  verify   --families <list> --m <int> --r <int> --n-max <int>\n"
    "           [--methods series,gf,det,op,ode] [--cases <ids>] [--jobs <int>]\n"
    "  grid     --family <spec> --m <int> --r <int> --n <int>\n"
    "           --sweep <var>=<from>:<to>:<steps> --sweep <var>=<from>:<to>:<steps>\n"
    "           [--fix <var>=<rat>]... [--digits <int>]\n"
    "  families\n"
    "  bench    --family <spec> --m <int> --r <int> --n-max <int>\n"
    "rational literals are integers or p/q fractions; decimals are rejected\n";

Var parse_var(std::string_view name) {
    if (name == "x") return Var::x;
    if (name == "y") return Var::y;
    if (name == "z") return Var::z;
    throw InvalidParameter("unknown variable '" + std::string(name) + "' (expected x, y or z)");
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    while (true) {
        auto pos = text.find(sep);
        out.emplace_back(text.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        text = text.substr(pos + 1);
    }
    return out;
}

// Family specs themselves contain commas (apostol-euler:alpha=1,lambda=2),
// so a comma segment whose head is a key=value pair continues the
// preceding spec rather than starting a new one. Family names never
// contain '='.
std::vector<std::string> split_family_list(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& item : split(text, ',')) {
        std::string head = item.substr(0, item.find(':'));
        bool continuation = head.find('=') != std::string::npos && !out.empty();
        if (continuation)
            out.back() += "," + item;
        else
            out.push_back(item);
    }
    return out;
}

struct SweepSpec {
    Var var;
    Rational from, to;
    int steps = 0;
};

SweepSpec parse_sweep(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw InvalidGrid("bad sweep '" + text + "' (expected var=from:to:steps)");
    auto parts = split(std::string_view(text).substr(eq + 1), ':');
    if (parts.size() != 3)
        throw InvalidGrid("bad sweep '" + text + "' (expected var=from:to:steps)");
    SweepSpec s{parse_var(text.substr(0, eq)), Rational::parse(parts[0]), Rational::parse(parts[1]),
                0};
    Rational steps = Rational::parse(parts[2]);
    if (!steps.is_integer() || !steps.num().fits_sint_p())
        throw InvalidGrid("sweep steps must be an integer");
    s.steps = static_cast<int>(steps.num().get_si());
    if (s.steps < 2)
        throw InvalidGrid("sweep needs steps >= 2");
    if (s.from == s.to)
        throw InvalidGrid("sweep needs from != to");
    return s;
}

struct ExpandArgs {
    std::string family;
    int m = 1, r = 1, n = 0;
    std::string format = "text";
};

int run_expand(const ExpandArgs& a, std::ostream& out) {
    AppellFamily fam = make_family(a.family);
    LghParams p(a.m, a.r);
    Poly3 poly = lghap_series(fam, p, a.n);
    if (a.format == "text") {
        out << poly.str() << "\n";
    } else {
        nlohmann::ordered_json j;
        j["family"] = fam.spec();
        j["m"] = a.m;
        j["r"] = a.r;
        j["n"] = a.n;
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [mono, coeff] : poly.terms()) {
            nlohmann::ordered_json t;
            t["x"] = mono.ex;
            t["y"] = mono.ey;
            t["z"] = mono.ez;
            t["coeff"] = coeff.str();
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        out << j.dump() << "\n";
    }
    return 0;
}

int run_eval(const ExpandArgs& a, const std::string& at, std::ostream& out) {
    AppellFamily fam = make_family(a.family);
    Poly3 poly = lghap_series(fam, LghParams(a.m, a.r), a.n);
    std::map<Var, Rational> point = {{Var::x, Rational(0)}, {Var::y, Rational(0)},
                                     {Var::z, Rational(0)}};
    if (!at.empty()) {
        for (const auto& item : split(at, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InvalidParameter("bad --at entry '" + item + "' (expected var=rational)");
            point[parse_var(item.substr(0, eq))] = Rational::parse(item.substr(eq + 1));
        }
    }
    out << poly.eval(point[Var::x], point[Var::y], point[Var::z]).str() << "\n";
    return 0;
}

struct GridArgs {
    ExpandArgs base;
    std::vector<std::string> fixes;
    std::vector<std::string> sweeps;
    int digits = 12;
};

int run_grid(const GridArgs& a, std::ostream& out) {
    if (a.sweeps.size() != 2)
        throw InvalidGrid("grid needs exactly two --sweep options");
    if (a.digits < 0)
        throw InvalidGrid("digits must be nonnegative");
    SweepSpec s1 = parse_sweep(a.sweeps[0]);
    SweepSpec s2 = parse_sweep(a.sweeps[1]);
    if (s1.var == s2.var)
        throw InvalidGrid("the two swept variables must differ");

    std::map<Var, Rational> fixed = {{Var::x, Rational(0)}, {Var::y, Rational(0)},
                                     {Var::z, Rational(0)}};
    std::map<Var, bool> fixed_seen;
    for (const auto& f : a.fixes) {
        auto eq = f.find('=');
        if (eq == std::string::npos)
            throw InvalidGrid("bad --fix '" + f + "' (expected var=rational)");
        Var v = parse_var(f.substr(0, eq));
        if (v == s1.var || v == s2.var)
            throw InvalidGrid("cannot fix swept variable '" + std::string(var_name(v)) + "'");
        if (fixed_seen[v])
            throw InvalidGrid("variable '" + std::string(var_name(v)) + "' fixed twice");
        fixed_seen[v] = true;
        fixed[v] = Rational::parse(f.substr(eq + 1));
    }

    AppellFamily fam = make_family(a.base.family);
    Poly3 poly = lghap_series(fam, LghParams(a.base.m, a.base.r), a.base.n);

    auto node = [](const SweepSpec& s, int i) {
        return s.from + Rational(i) * (s.to - s.from) / Rational(s.steps - 1);
    };

    out << var_name(s1.var) << ',' << var_name(s2.var) << ",value\n";
    for (int i = 0; i < s1.steps; ++i) {
        Rational v1 = node(s1, i);
        for (int j = 0; j < s2.steps; ++j) {
            Rational v2 = node(s2, j);
            std::map<Var, Rational> pt = fixed;
            pt[s1.var] = v1;
            pt[s2.var] = v2;
            Rational value = poly.eval(pt[Var::x], pt[Var::y], pt[Var::z]);
            out << v1.decimal(a.digits) << ',' << v2.decimal(a.digits) << ','
                << value.decimal(a.digits) << "\n";
        }
    }
    return 0;
}

int run_families(std::ostream& out) {
    struct Row {
        const char* spec;
        const char* gf;
    };
    static const Row rows[] = {
        {"bernoulli", "A(t) = t/(e^t - 1)"},
        {"euler", "A(t) = 2/(e^t + 1)"},
        {"genocchi", "A(t) = 2t/(e^t + 1)   (A0 = 0: no beta/determinant route)"},
        {"miller-lee[:s=<int >= -1>]", "A(t) = 1/(1 - t)^(s+1)   (ordinary-GF base polynomials)"},
        {"trunc-exp", "alias of miller-lee:s=0"},
        {"modified-laguerre[:beta=<int >= 1>]", "alias of miller-lee:s=beta-1"},
        {"gen-bernoulli[:alpha=<int >= 0>]", "A(t) = (t/(e^t - 1))^alpha"},
        {"gen-euler[:alpha=<int >= 0>]", "A(t) = (2/(e^t + 1))^alpha"},
        {"apostol-bernoulli[:alpha=..,lambda=..]", "A(t) = (t/(lambda e^t - 1))^alpha"},
        {"apostol-euler[:alpha=..,lambda=..]", "A(t) = (2/(lambda e^t + 1))^alpha"},
    };
    for (const Row& r : rows) {
        out << r.spec;
        for (size_t i = std::string(r.spec).size(); i < 40; ++i)
            out << ' ';
        out << r.gf << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Appell-based Laguerre-Gould Hopper polynomial kernel"};
    app.require_subcommand(1);

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "print the polynomial in canonical text form");
    expand->add_option("--family", expand_args.family)->required();
    expand->add_option("--m", expand_args.m)->required();
    expand->add_option("--r", expand_args.r)->required();
    expand->add_option("--n", expand_args.n)->required();
    expand->add_option("--format", expand_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    ExpandArgs eval_args;
    std::string at;
    auto* eval = app.add_subcommand("eval", "evaluate the polynomial at an exact rational point");
    eval->add_option("--family", eval_args.family)->required();
    eval->add_option("--m", eval_args.m)->required();
    eval->add_option("--r", eval_args.r)->required();
    eval->add_option("--n", eval_args.n)->required();
    eval->add_option("--at", at)->required();

    VerifyOptions verify_opt;
    std::string families_csv, methods_csv = "series,gf,det,op,ode", cases_csv;
    auto* verify = app.add_subcommand("verify", "cross-check the construction routes");
    verify->add_option("--families", families_csv)->required();
    verify->add_option("--m", verify_opt.m)->required();
    verify->add_option("--r", verify_opt.r)->required();
    verify->add_option("--n-max", verify_opt.nmax)->required();
    verify->add_option("--methods", methods_csv);
    verify->add_option("--cases", cases_csv);
    verify->add_option("--jobs", verify_opt.jobs);

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "emit a CSV evaluation grid");
    grid->add_option("--family", grid_args.base.family)->required();
    grid->add_option("--m", grid_args.base.m)->required();
    grid->add_option("--r", grid_args.base.r)->required();
    grid->add_option("--n", grid_args.base.n)->required();
    grid->add_option("--fix", grid_args.fixes);
    grid->add_option("--sweep", grid_args.sweeps);
    grid->add_option("--digits", grid_args.digits);

    auto* families = app.add_subcommand("families", "list the registered Appell families");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time the evaluation routes");
    bench->add_option("--family", bench_opt.family)->required();
    bench->add_option("--m", bench_opt.m)->required();
    bench->add_option("--r", bench_opt.r)->required();
    bench->add_option("--n-max", bench_opt.nmax)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << kGrammar;
        return 2;
    }

    try {
        if (expand->parsed())
            return run_expand(expand_args, out);
        if (eval->parsed())
            return run_eval(eval_args, at, out);
        if (verify->parsed()) {
            verify_opt.families = split_family_list(families_csv);
            verify_opt.methods = split(methods_csv, ',');
            if (!cases_csv.empty())
                verify_opt.cases = split(cases_csv, ',');
            return run_verify(verify_opt, out);
        }
        if (grid->parsed())
            return run_grid(grid_args, out);
        if (families->parsed())
            return run_families(out);
        if (bench->parsed())
            return run_bench(bench_opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n" << kGrammar;
        return 2;
    }
    err << kGrammar;
    return 2;
}

} // namespace lghap::cli
