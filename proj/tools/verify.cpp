// Command-line front end for the inequality verification suite.
//
// Subcommands:
//   verify     run randomized property suites for one or all inequalities
//   reproduce  recompute the worked 2x2 examples against their references
//   falsify    randomized search on the open conjecture (evidence only)
//   matrix     inspect a matrix file: spectrum, PSD flag, trace
//
// Exit codes: 0 success, 1 inequality violation or failed reproduction,
// 2 usage/config errors. Conjecture-search margins never affect the exit code.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqt/suite.hpp"

using namespace sqt;

namespace {

int run_verify(const std::string& ineq, std::size_t n_pinned, std::size_t trials,
               const std::string& func, std::uint64_t seed, double tol, bool as_json,
               const std::string& witness_path) {
    SuiteConfig cfg;
    if (ineq != "all") {
        const auto& known = all_inequalities();
        bool found = false;
        for (const auto& k : known)
            if (k == ineq || parse_ineq(k, 0).first == parse_ineq(ineq, 0).first) found = true;
        if (!found) throw ConfigError("unknown inequality: " + ineq);
        cfg.inequalities = {ineq};
    }
    if (n_pinned != 0) cfg.dims = {n_pinned};
    cfg.trials = trials;
    if (!func.empty()) cfg.functions = {func};
    cfg.seed = seed;
    cfg.tol = tol;
    if (!witness_path.empty()) cfg.witness_path = witness_path;

    auto res = run_suite(cfg);
    if (as_json) {
        std::cout << res.to_json().dump(2) << "\n";
    } else {
        for (const auto& [name, st] : res.stats)
            std::printf("%-34s %zu/%zu passed, min margin %+.3e (worst seed %llu)\n",
                        name.c_str(), st.passes, st.trials, st.min_margin,
                        static_cast<unsigned long long>(st.worst_seed));
    }
    return res.all_passed() ? 0 : 1;
}

int run_reproduce(bool as_json) {
    auto rep = reproduce_examples();
    if (as_json) {
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back({{"label", l.label},
                             {"computed", l.computed},
                             {"reference", l.reference},
                             {"allowed_delta", l.allowed_delta},
                             {"ok", l.ok}});
        std::cout << json{{"passed", rep.passed}, {"lines", lines}}.dump(2) << "\n";
    } else {
        for (const auto& l : rep.lines)
            std::printf("%-4s %-52s computed %.9f reference %.9f (tol %g)\n",
                        l.ok ? "ok" : "FAIL", l.label.c_str(), l.computed, l.reference,
                        l.allowed_delta);
    }
    return rep.passed ? 0 : 1;
}

int run_falsify(std::size_t trials, std::size_t n, std::uint64_t seed, bool as_json) {
    std::vector<std::size_t> dims;
    if (n != 0) dims = {n};
    auto res = falsify_conjecture(trials, dims, {}, seed);
    if (as_json) {
        std::cout << res.to_json().dump(2) << "\n";
    } else {
        std::printf("search evidence only, not a verdict on the conjecture\n");
        std::printf("trials %zu\n", res.trials);
        std::printf("min margin (literal shift)    %+.6e  seed %llu\n", res.min_margin_literal,
                    static_cast<unsigned long long>(res.worst_seed_literal));
        std::printf("min margin (normalized shift) %+.6e  seed %llu\n",
                    res.min_margin_normalized,
                    static_cast<unsigned long long>(res.worst_seed_normalized));
    }
    return 0; // informational: margins never fail the run
}

int run_matrix(const std::string& path, bool as_json) {
    CMat A = load_matrix(path);
    const CMat H = require_hermitian(A, 1e-9);
    auto vals = eigenvalues(H);
    if (as_json) {
        std::cout << json{{"n", H.rows()},
                          {"trace", H.trace().real()},
                          {"eigenvalues", vals},
                          {"psd", is_psd(H)}}
                         .dump(2)
                  << "\n";
    } else {
        std::printf("n = %zu, trace = %.9g, psd = %s\neigenvalues:", H.rows(),
                    H.trace().real(), is_psd(H) ? "yes" : "no");
        for (double v : vals) std::printf(" %.9g", v);
        std::printf("\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace inequality verification suite"};
    app.require_subcommand(1);

    std::string ineq = "all", func, witness_path, matrix_path;
    std::size_t n = 0, trials = 100;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    bool as_json = false;

    auto* v = app.add_subcommand("verify", "run randomized property suites");
    v->add_option("--ineq", ineq, "inequality name or 'all'");
    v->add_option("--n", n, "pin the matrix dimension (default: mix of 2,3,4,6)");
    v->add_option("--trials", trials, "trials per inequality/function pair");
    v->add_option("--f", func, "pin one scalar function, e.g. pow:3");
    v->add_option("--seed", seed, "master seed");
    v->add_option("--tol", tol, "margin tolerance");
    v->add_option("--witnesses", witness_path, "append failing reports to this ndjson file");
    v->add_flag("--json", as_json, "JSON output");

    auto* r = app.add_subcommand("reproduce", "recompute the worked 2x2 examples");
    r->add_flag("--json", as_json, "JSON output");

    auto* fz = app.add_subcommand("falsify", "randomized conjecture search (evidence only)");
    fz->add_option("--trials", trials, "total trial budget");
    fz->add_option("--n", n, "matrix dimension (default: mix of 2,3,4)");
    fz->add_option("--seed", seed, "master seed");
    fz->add_flag("--json", as_json, "JSON output");

    auto* m = app.add_subcommand("matrix", "inspect a matrix file");
    m->add_option("--file", matrix_path, "matrix json file")->required();
    m->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return run_verify(ineq, n, trials, func, seed, tol, as_json, witness_path);
        if (r->parsed()) return run_reproduce(as_json);
        if (fz->parsed()) return run_falsify(trials, n, seed, as_json);
        if (m->parsed()) return run_matrix(matrix_path, as_json);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
