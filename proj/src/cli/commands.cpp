/*
   Copyright 2026 The jacinv Authors

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

#include "jacinv/cli/commands.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacinv/cli/verify.hpp"
#include "jacinv/errors.hpp"
#include "jacinv/families.hpp"
#include "jacinv/genfamilies.hpp"
#include "jacinv/solver.hpp"

namespace jacinv::cli {

namespace {

// Rational flags are kept as text until the command knows which it needs.
struct RationalFlags {
    std::map<std::string, std::string> text;
    std::map<std::string, CLI::Option*> options;

    void add(CLI::App& app, const std::string& name, const std::string& help) {
        options[name] = app.add_option("--" + name, text[name], help);
    }

    bool given(const std::string& name) const {
        auto it = options.find(name);
        return it != options.end() && it->second->count() > 0;
    }

    Rational get(const std::string& name) const {
        if (!given(name)) throw ConfigError("missing --" + name);
        return Rational::parse(text.at(name));
    }

    Rational get_or(const std::string& name, const Rational& fallback) const {
        return given(name) ? Rational::parse(text.at(name)) : fallback;
    }
};

// Writes to --out when given, otherwise to the stream passed to run_cli.
class Sink {
   public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw ConfigError("cannot open output file '" + path + "'");
        stream_ = &file_;
    }
    std::ostream& stream() { return *stream_; }

   private:
    std::ofstream file_;
    std::ostream* stream_;
};

struct EvalOptions {
    std::string family;
    int n = 0;
    std::string variant = "P";
    std::string out;
};

struct VerifyOptions {
    std::string identity;
    int order_max = 6;
    int grid = 1;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::string out;
};

struct SolveOptions {
    std::string family;
    int order = 1;
    int shift = 0;
    std::string rhs = "random";
    std::string rhs_file;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_eval(const EvalOptions& opt, const RationalFlags& flags, std::ostream& out) {
    if (opt.n < 0) throw ConfigError("--n must be >= 0");
    const Rational zero(0);
    Poly result;
    if (opt.family == "jacobi") {
        result = jacobi(opt.n, {flags.get("alpha"), flags.get("beta")});
    } else if (opt.family == "laguerre") {
        result = laguerre(opt.n, {flags.get("alpha")});
    } else if (opt.family == "charlier") {
        result = charlier(opt.n, {flags.get("a")});
    } else if (opt.family == "gen-jacobi") {
        result = gen_jacobi(opt.n, GeneralizedJacobiParams(flags.get("alpha"), flags.get("beta"),
                                                           flags.get_or("M", zero), flags.get_or("N", zero)));
    } else if (opt.family == "sobolev-laguerre") {
        result = sobolev_laguerre(
            opt.n, SobolevLaguerreParams(flags.get("alpha"), flags.get_or("M", zero), flags.get_or("N", zero)));
    } else if (opt.family == "sym-ultra") {
        if (opt.variant != "P" && opt.variant != "Q") throw ConfigError("--variant must be P or Q");
        result = sym_ultraspherical(opt.n, flags.get("alpha"), flags.get_or("M", zero),
                                    opt.variant == "P" ? UltrasphericalVariant::P : UltrasphericalVariant::Q);
    } else {
        throw ConfigError("unknown family '" + opt.family + "'");
    }
    Sink sink(opt.out, out);
    sink.stream() << result.to_string() << '\n';
    return exit_ok;
}

int cmd_verify(const VerifyOptions& opt, const RationalFlags& flags, std::ostream& out) {
    VerifyConfig config;
    config.identity = opt.identity;
    config.order_max = opt.order_max;
    config.grid = opt.grid;
    config.seed = opt.seed;
    config.tolerance = opt.tolerance;
    for (const auto& [name, option] : flags.options)
        if (option->count() > 0) config.pinned[name] = flags.get(name);
    const auto reports = run_verify(config);
    Sink sink(opt.out, out);
    bool all_passed = true;
    for (const auto& r : reports) {
        sink.stream() << to_json(r).dump() << '\n';
        all_passed = all_passed && r.passed();
    }
    return all_passed ? exit_ok : exit_check_failed;
}

std::vector<Poly> read_rhs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read rhs file '" + path + "'");
    std::vector<Poly> rhs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.back() == '\r') line.pop_back();
        rhs.push_back(Poly::parse(line));
    }
    return rhs;
}

int cmd_solve(const SolveOptions& opt, const RationalFlags& flags, std::ostream& out) {
    if (opt.order < 1) throw ConfigError("--order must be >= 1");
    if (opt.shift < 0) throw ConfigError("--shift must be >= 0");
    TriangularSystem system;
    if (opt.family == "jacobi") {
        if (opt.shift != 0) throw ConfigError("--shift applies to the laguerre family only");
        system.family = JacobiParams{flags.get("alpha"), flags.get("beta")};
    } else if (opt.family == "laguerre") {
        system.family = LaguerreShift{{flags.get("alpha")}, opt.shift};
    } else {
        throw ConfigError("unknown family '" + opt.family + "' (expected jacobi or laguerre)");
    }

    std::optional<std::uint64_t> seed;
    if (opt.rhs == "random") {
        system.rhs = random_rhs(opt.order, opt.shift, opt.seed);
        seed = opt.seed;
    } else if (opt.rhs == "file") {
        if (opt.rhs_file.empty()) throw ConfigError("--rhs file needs --rhs-file");
        system.rhs = read_rhs_file(opt.rhs_file);
        if (static_cast<int>(system.rhs.size()) != opt.order)
            throw ConfigError("rhs file holds " + std::to_string(system.rhs.size()) + " polynomials, --order is " +
                              std::to_string(opt.order));
    } else {
        throw ConfigError("--rhs must be random or file");
    }

    const SolvedSystem solved = solve_and_check(std::move(system), seed);
    Sink sink(opt.out, out);
    sink.stream() << to_json(solved).dump() << '\n';
    return solved.agrees && solved.residuals_zero ? exit_ok : exit_check_failed;
}

void add_family_flags(CLI::App& cmd, RationalFlags& flags, const std::vector<std::string>& names) {
    static const std::map<std::string, std::string> help{
        {"alpha", "alpha parameter (p/q)"},   {"beta", "beta parameter (p/q)"},
        {"a", "Charlier parameter (p/q)"},    {"M", "first point mass (p/q)"},
        {"N", "second point mass (p/q)"},     {"b", "summation parameter b (p/q)"},
        {"c", "summation parameter c (p/q)"}, {"p", "generalized inversion offset p (p/q)"},
        {"q", "generalized inversion offset q (p/q)"},
    };
    for (const auto& name : names) flags.add(cmd, name, help.at(name));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of Jacobi, Laguerre and Charlier polynomial identities."};
    app.name("jacinv");
    app.require_subcommand(1);

    EvalOptions eval_opt;
    RationalFlags eval_flags;
    auto* eval = app.add_subcommand("eval", "Print a polynomial family member");
    eval->add_option("--family", eval_opt.family,
                     "jacobi | laguerre | charlier | gen-jacobi | sobolev-laguerre | sym-ultra")
        ->required();
    eval->add_option("--n", eval_opt.n, "degree")->required();
    eval->add_option("--variant", eval_opt.variant, "sym-ultra variant: P or Q");
    eval->add_option("--out", eval_opt.out, "write output to this file");
    add_family_flags(*eval, eval_flags, {"alpha", "beta", "a", "M", "N"});

    VerifyOptions verify_opt;
    RationalFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "Check an identity over a seeded parameter grid (JSON lines)");
    verify->add_option("--identity", verify_opt.identity, "identity id")->required();
    verify->add_option("--order-max", verify_opt.order_max, "largest order checked");
    verify->add_option("--grid", verify_opt.grid, "number of parameter points");
    verify->add_option("--seed", verify_opt.seed, "seed for the parameter grid");
    verify->add_option("--tolerance", verify_opt.tolerance, "relative slack for the limit certificates");
    verify->add_option("--out", verify_opt.out, "write output to this file");
    add_family_flags(*verify, verify_flags, {"alpha", "beta", "a", "b", "c", "p", "q"});

    SolveOptions solve_opt;
    RationalFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "Solve a triangular system by closed form and back-substitution");
    solve->add_option("--family", solve_opt.family, "jacobi | laguerre")->required();
    solve->add_option("--order", solve_opt.order, "number of equations")->required();
    solve->add_option("--shift", solve_opt.shift, "derivative shift k (laguerre)");
    solve->add_option("--rhs", solve_opt.rhs, "random | file");
    solve->add_option("--rhs-file", solve_opt.rhs_file, "one polynomial per line");
    solve->add_option("--seed", solve_opt.seed, "seed for --rhs random");
    solve->add_option("--out", solve_opt.out, "write output to this file");
    add_family_flags(*solve, solve_flags, {"alpha", "beta"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_config;
    }

    try {
        if (*eval) return cmd_eval(eval_opt, eval_flags, out);
        if (*verify) return cmd_verify(verify_opt, verify_flags, out);
        return cmd_solve(solve_opt, solve_flags, out);
    } catch (const ResidualError& e) {
        err << "error: " << e.what() << '\n';
        return exit_check_failed;
    } catch (const MathError& e) {
        // Poles, singular systems and continuity cases are all invalid input here.
        err << "error: " << e.what() << '\n';
        return exit_bad_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_config;
    }
}

}  // namespace jacinv::cli
