#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqt/io.hpp"
#include "sqt/report.hpp"
#include "sqt/rng.hpp"
#include "sqt/verifiers.hpp"

namespace sqt {

inline const std::vector<std::string>& all_inequalities() {
    static const std::vector<std::string> names = {
        "jensen_scalar",
        "jensen_vector_state",
        "jensen_map_state",
        "trace_jensen_superquadratic:0.3",
        "trace_jensen_superquadratic:0.5",
        "trace_jensen_superquadratic:0.7",
        "lemma2_bound",
        "hansen_pedersen_trace",
        "isometry_jensen",
        "min_correction_trace_jensen",
        "klein_convex",
        "klein_superquadratic",
        "klein_upper_bound",
        "peierls",
    };
    return names;
}

// Functions exercised per inequality when the config does not pin one.
inline std::vector<std::string> default_functions_for(const std::string& ineq) {
    const std::vector<std::string> superquad = {"pow:2", "pow:2.5", "pow:3", "pow:4",
                                                "negpow:1.5"};
    const std::vector<std::string> superquad_nonneg = {"pow:2", "pow:2.5", "pow:3", "pow:4"};
    const std::vector<std::string> convex = {"pow:2", "pow:2.5", "pow:3", "pow:4", "tlogt"};
    if (ineq == "klein_convex" || ineq == "hansen_pedersen_trace") return convex;
    if (ineq == "isometry_jensen") return superquad_nonneg;
    if (ineq == "klein_upper_bound") return {"abspow:1.5", "abspow:1.2", "pow:2"};
    return superquad;
}

struct SuiteConfig {
    std::vector<std::string> inequalities = all_inequalities();
    std::vector<std::size_t> dims = {2, 3, 4, 6};
    std::size_t trials = 100;
    std::vector<std::string> functions; // empty = per-inequality defaults
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::optional<std::string> witness_path;
};

struct InequalityStats {
    std::size_t trials = 0;
    std::size_t passes = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::uint64_t worst_seed = 0;
    json worst_report;
};

struct SuiteResult {
    std::map<std::string, InequalityStats> stats;
    bool all_passed() const {
        for (const auto& [k, v] : stats)
            if (v.passes != v.trials) return false;
        return true;
    }
    json to_json() const {
        json out = json::object();
        for (const auto& [k, v] : stats)
            out[k] = json{{"trials", v.trials},
                          {"passes", v.passes},
                          {"min_margin", v.min_margin},
                          {"worst_seed", v.worst_seed},
                          {"worst_report", v.worst_report}};
        return out;
    }
};

namespace detail {

struct SeedStream {
    std::uint64_t state;
    explicit SeedStream(std::uint64_t s) : state(s) {}
    std::uint64_t next() { return splitmix64(state); }
};

// Random doubly stochastic transfer: y nonnegative, x = P y for a product of
// random T-transforms, so x is majorized by y by construction.
inline std::pair<std::vector<double>, std::vector<double>> gen_majorized_pair(
    std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<double> y(n);
    for (auto& v : y) v = std::abs(rng.gaussian()) * 2.0;
    std::vector<double> x = y;
    const std::size_t mixes = 2 * n;
    for (std::size_t s = 0; s < mixes; ++s) {
        std::size_t i = rng.next() % n, j = rng.next() % n;
        if (i == j) continue;
        const double t = rng.uniform();
        const double xi = x[i], xj = x[j];
        x[i] = t * xi + (1.0 - t) * xj;
        x[j] = (1.0 - t) * xi + t * xj;
    }
    return {x, y};
}

} // namespace detail

// Split "name:param" for parameterized inequality entries.
inline std::pair<std::string, double> parse_ineq(const std::string& spec, double fallback) {
    auto pos = spec.find(':');
    if (pos == std::string::npos) return {spec, fallback};
    return {spec.substr(0, pos), std::stod(spec.substr(pos + 1))};
}

// One fresh instance of the named inequality; fully determined by
// (name, function, n, seed).
inline VerificationReport run_instance(const std::string& ineq_spec,
                                       const std::string& func_spec, std::size_t n,
                                       std::uint64_t seed, double tol = kDefaultTol) {
    const auto [name, param] = parse_ineq(ineq_spec, 0.5);
    const ScalarFunction f = catalog_parse(func_spec);
    detail::SeedStream ss(seed);
    VerificationReport r;

    if (name == "jensen_scalar") {
        Xoshiro256 rng(ss.next());
        std::vector<double> w(n), v(n);
        double wsum = 0.0;
        for (auto& x : w) {
            x = rng.uniform() + 1e-3;
            wsum += x;
        }
        for (auto& x : w) x /= wsum;
        // renormalize exactly against roundoff in the sum
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) acc += w[i];
        w[n - 1] = 1.0 - acc;
        for (auto& x : v) x = std::abs(rng.gaussian()) * 2.0;
        r = jensen_scalar(f, w, v, tol);
    } else if (name == "jensen_vector_state") {
        const std::uint64_t sa = ss.next(), su = ss.next();
        r = jensen_vector_state(f, gen_psd(n, sa), gen_unit_vector(n, su), tol);
    } else if (name == "jensen_map_state") {
        const CMat A = gen_psd(n, ss.next());
        const std::uint64_t pick = ss.next();
        UnitalPositiveMap phi =
            pick % 3 == 0 ? UnitalPositiveMap::identity_map(n)
            : pick % 3 == 1 ? gen_pinching(n, 1 + (pick / 3) % n, ss.next())
                            : gen_kraus_map(n, 2, ss.next());
        const std::uint64_t pick2 = ss.next();
        State tau = pick2 % 3 == 0 ? State::normalized_trace(phi.output_dim())
                    : pick2 % 3 == 1
                        ? gen_density(phi.output_dim(), ss.next())
                        : State::vector_state(gen_unit_vector(phi.output_dim(), ss.next()));
        r = jensen_map_state(f, A, phi, tau, tol);
    } else if (name == "trace_jensen_superquadratic") {
        const std::uint64_t sa = ss.next(), sb = ss.next();
        r = trace_jensen_superquadratic(f, gen_psd(n, sa), gen_psd(n, sb), param, tol);
    } else if (name == "lemma2_bound") {
        auto [x, y] = detail::gen_majorized_pair(n, ss.next());
        r = lemma2_bound_report(f, x, y, tol);
    } else if (name == "hansen_pedersen_trace") {
        auto C = gen_kraus_family(n, 2, ss.next());
        std::vector<CMat> A;
        for (std::size_t i = 0; i < C.size(); ++i) A.push_back(gen_psd(n, ss.next()));
        r = hansen_pedersen_trace(f, A, C, tol);
    } else if (name == "conjecture_margin") {
        auto C = gen_kraus_family(n, 2, ss.next());
        std::vector<CMat> A;
        for (std::size_t i = 0; i < C.size(); ++i) A.push_back(gen_psd(n, ss.next()));
        r = conjecture_margin(f, A, C, tol);
    } else if (name == "isometry_jensen") {
        const std::size_t m = 1 + ss.next() % n;
        const std::uint64_t sa = ss.next(), sc = ss.next();
        r = isometry_jensen(f, gen_psd(n, sa), gen_isometry(n, m, sc), tol);
    } else if (name == "min_correction_trace_jensen") {
        const std::uint64_t pick = ss.next();
        UnitalPositiveMap phi = pick % 2 == 0 ? gen_pinching(n, 1 + (pick / 2) % n, ss.next())
                                              : gen_kraus_map(n, 2, ss.next());
        const std::uint64_t basis_seed = ss.next();
        auto sampler = [basis_seed](std::size_t m, std::size_t t) {
            return gen_basis(m, trial_seed(basis_seed, t));
        };
        r = min_correction_trace_jensen(f, gen_psd(n, ss.next()), phi, 8, sampler, tol);
    } else if (name == "klein_convex") {
        const std::uint64_t sa = ss.next(), sb = ss.next();
        r = klein_convex(f, gen_psd(n, sa), gen_psd(n, sb), tol);
    } else if (name == "klein_superquadratic") {
        const std::uint64_t sa = ss.next(), sb = ss.next();
        r = klein_superquadratic(f, gen_psd(n, sa), gen_psd(n, sb), tol);
    } else if (name == "klein_upper_bound") {
        const std::uint64_t sa = ss.next(), sb = ss.next();
        r = klein_upper_bound(f, gen_psd(n, sa), gen_psd(n, sb), tol);
    } else if (name == "peierls") {
        const std::uint64_t sa = ss.next(), sb = ss.next();
        r = peierls(f, gen_psd(n, sa), gen_basis(n, sb), tol);
    } else {
        throw ConfigError("run_instance: unknown inequality '" + name + "'");
    }

    r.seed = seed;
    r.witnesses["n"] = n;
    r.witnesses["function"] = f.name;
    r.witnesses["inequality"] = ineq_spec;
    return r;
}

inline SuiteResult run_suite(const SuiteConfig& cfg) {
    if (cfg.trials == 0) throw ConfigError("run_suite: trials must be positive");
    if (cfg.dims.empty()) throw ConfigError("run_suite: dims must not be empty");
    SuiteResult result;
    std::ofstream witness_out;
    if (cfg.witness_path) witness_out.open(*cfg.witness_path, std::ios::app);

    for (const auto& ineq : cfg.inequalities) {
        const std::vector<std::string> funcs =
            cfg.functions.empty() ? default_functions_for(ineq) : cfg.functions;
        auto& st = result.stats[ineq];
        std::uint64_t counter = 0;
        for (const auto& fn : funcs) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const std::uint64_t seed = trial_seed(cfg.seed, counter++);
                const std::size_t n = cfg.dims[seed % cfg.dims.size()];
                VerificationReport rep = run_instance(ineq, fn, n, seed, cfg.tol);
                ++st.trials;
                if (rep.passed) ++st.passes;
                if (rep.margin < st.min_margin) {
                    st.min_margin = rep.margin;
                    st.worst_seed = seed;
                    st.worst_report = rep.to_json();
                }
                if (!rep.passed && witness_out) witness_out << rep.to_json() << "\n";
            }
        }
    }
    return result;
}

struct FalsifyResult {
    std::size_t trials = 0;
    double min_margin_literal = std::numeric_limits<double>::infinity();
    double min_margin_normalized = std::numeric_limits<double>::infinity();
    std::uint64_t worst_seed_literal = 0;
    std::uint64_t worst_seed_normalized = 0;
    json worst_literal, worst_normalized;

    json to_json() const {
        return json{{"kind", "conjecture_falsification_search"},
                    {"note", "search evidence only, not a verdict on the conjecture"},
                    {"trials", trials},
                    {"min_margin_scalar_literal", min_margin_literal},
                    {"min_margin_scalar_normalized", min_margin_normalized},
                    {"worst_seed_scalar_literal", worst_seed_literal},
                    {"worst_seed_scalar_normalized", worst_seed_normalized},
                    {"worst_report_scalar_literal", worst_literal},
                    {"worst_report_scalar_normalized", worst_normalized}};
    }
};

inline FalsifyResult falsify_conjecture(std::size_t trials, std::vector<std::size_t> dims,
                                        std::vector<std::string> functions,
                                        std::uint64_t seed) {
    if (trials == 0) throw ConfigError("falsify_conjecture: trials must be positive");
    if (dims.empty()) dims = {2, 3, 4};
    if (functions.empty()) functions = {"pow:2.5", "pow:3", "pow:4", "negpow:1.5"};

    // `trials` is the total budget, split evenly across the function list
    const std::size_t per_fn = (trials + functions.size() - 1) / functions.size();
    FalsifyResult out;
    std::uint64_t counter = 0;
    for (const auto& fn : functions) {
        for (std::size_t t = 0; t < per_fn; ++t) {
            const std::uint64_t s = trial_seed(seed, counter++);
            const std::size_t n = dims[s % dims.size()];
            VerificationReport rep = run_instance("conjecture_margin", fn, n, s);
            ++out.trials;
            const double ml = rep.witnesses.at("margin_scalar_literal").get<double>();
            const double mn = rep.witnesses.at("margin_scalar_normalized").get<double>();
            if (ml < out.min_margin_literal) {
                out.min_margin_literal = ml;
                out.worst_seed_literal = s;
                out.worst_literal = rep.to_json();
            }
            if (mn < out.min_margin_normalized) {
                out.min_margin_normalized = mn;
                out.worst_seed_normalized = s;
                out.worst_normalized = rep.to_json();
            }
        }
    }
    return out;
}

struct PaperExampleLine {
    std::string label;
    double computed = 0.0;
    double reference = 0.0;
    double allowed_delta = 0.0;
    bool ok = false;
};

struct PaperExamplesReport {
    std::vector<PaperExampleLine> lines;
    bool passed = true;
};

// Reproduces the two worked 2x2 examples: the cubic Klein gap (integer 20 and
// Tr|A-B|^3 = 10*sqrt(2)) and the p=3/2 Klein value with its matching-max bound.
inline PaperExamplesReport reproduce_examples() {
    CMat A(2, 2), B(2, 2);
    A(0, 0) = 2; A(0, 1) = 1; A(1, 0) = 1; A(1, 1) = 2;
    B(0, 0) = 2;

    PaperExamplesReport rep;
    auto add = [&rep](const std::string& label, double computed, double ref, double tol) {
        PaperExampleLine l{label, computed, ref, tol, std::abs(computed - ref) <= tol};
        rep.passed = rep.passed && l.ok;
        rep.lines.push_back(l);
    };

    const ScalarFunction cube = catalog("pow", 3.0);
    const double klein3 = detail::klein_expression(cube, A, B);
    add("Tr[A^3 - B^3 - 3(A-B)B^2]", klein3, 20.0, 1e-8);

    const double trabs3 =
        trace_function([](double t) { return std::pow(std::abs(t), 3.0); }, A - B);
    add("Tr|A-B|^3 (exact 10*sqrt(2))", trabs3, 10.0 * std::sqrt(2.0), 1e-8);
    add("Tr|A-B|^3 vs printed 14.15", trabs3, 14.15, 0.01);

    const ScalarFunction p32 = catalog("abspow", 1.5);
    const double klein32 = detail::klein_expression(p32, A, B);
    add("Tr[A^1.5 - B^1.5 - 1.5(A-B)B^0.5] vs printed 3.36", klein32, 3.36, 0.01);

    const auto ub = klein_upper_bound(p32, A, B);
    add("matching-max bound (exact 1 + 3*sqrt(3))", ub.rhs, 1.0 + 3.0 * std::sqrt(3.0), 1e-8);
    add("matching-max bound vs printed 6.19", ub.rhs, 6.19, 0.01);

    return rep;
}

} // namespace sqt
