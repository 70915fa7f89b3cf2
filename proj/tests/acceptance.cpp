// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "sqt/suite.hpp"

using namespace sqt;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void report(const std::string& label, bool ok, double secs, const std::string& detail) {
    std::printf("%s  %-34s (%6.2f s)  %s\n", ok ? "PASS" : "FAIL", label.c_str(), secs,
                detail.c_str());
    if (!ok) ++failures;
}

std::pair<CMat, CMat> worked_pair() {
    CMat A(2, 2), B(2, 2);
    A(0, 0) = 2; A(0, 1) = 1; A(1, 0) = 1; A(1, 1) = 2;
    B(0, 0) = 2;
    return {A, B};
}

void criterion1() {
    const auto t0 = clk::now();
    auto [A, B] = worked_pair();
    const double klein3 = detail::klein_expression(catalog("pow", 3.0), A, B);
    const double trabs3 =
        trace_function([](double t) { return std::pow(std::abs(t), 3.0); }, A - B);
    const double secs = seconds_since(t0);
    const bool ok = std::abs(klein3 - 20.0) <= 1e-8 &&
                    std::abs(trabs3 - 10.0 * std::sqrt(2.0)) <= 1e-8 &&
                    std::abs(trabs3 - 14.15) <= 0.01 && secs < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "cubic gap %.9f, Tr|A-B|^3 %.9f", klein3, trabs3);
    report("1 worked-example-cubic", ok, secs, buf);
}

void criterion2() {
    const auto t0 = clk::now();
    auto [A, B] = worked_pair();
    const ScalarFunction p32 = catalog("abspow", 1.5);
    const double lhs = detail::klein_expression(p32, A, B);
    const double ub = klein_upper_bound(p32, A, B).rhs;
    const double secs = seconds_since(t0);
    const bool ok = std::abs(lhs - 3.36) <= 0.01 && std::abs(ub - 6.19) <= 0.01 &&
                    std::abs(ub - (1.0 + 3.0 * std::sqrt(3.0))) <= 1e-8 && secs < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "p=3/2 gap %.6f, matching bound %.6f", lhs, ub);
    report("2 worked-example-three-halves", ok, secs, buf);
}

void criterion3() {
    const auto t0 = clk::now();
    bool ok = true;
    double worst = 0.0;
    std::string worst_where = "none";
    for (const auto& ineq : all_inequalities()) {
        const std::size_t nfuncs = default_functions_for(ineq).size();
        SuiteConfig cfg;
        cfg.inequalities = {ineq};
        cfg.trials = (1000 + nfuncs - 1) / nfuncs; // >= 1000 instances per inequality
        cfg.seed = 20240915;
        auto res = run_suite(cfg);
        const auto& st = res.stats.at(ineq);
        if (st.min_margin < worst) {
            worst = st.min_margin;
            worst_where = ineq;
        }
        if (st.passes != st.trials || st.min_margin < -1e-7) ok = false;
    }
    const double secs = seconds_since(t0);
    ok = ok && secs < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst margin %.3e (%s)", worst, worst_where.c_str());
    report("3 property-suites-1000x", ok, secs, buf);
}

void criterion4() {
    const auto t0 = clk::now();
    bool ok = true;
    double worst = 0.0;
    auto note = [&](double m, double lim) {
        worst = std::max(worst, std::abs(m));
        if (std::abs(m) > lim) ok = false;
    };
    for (std::uint64_t t = 0; t < 50; ++t) {
        const std::size_t n = 2 + t % 4;
        CMat A = gen_psd(n, 810000 + t), B = gen_psd(n, 820000 + t);
        const double scale = std::max(1.0, trace_function([](double x) { return x * x; }, A + B));

        // f=t^2 closed-loop identities
        auto rj = run_instance("jensen_scalar", "pow:2", n, trial_seed(31, t));
        note(rj.margin / std::max(1.0, std::abs(rj.rhs)), 1e-9);
        auto rt = trace_jensen_superquadratic(catalog("square"), A, B, 0.5);
        note(rt.witnesses.at("margin_correction_free").get<double>() / scale, 1e-9);
        auto rk = klein_superquadratic(catalog("square"), A, B);
        note(rk.witnesses.at("margin_nonnegative_form").get<double>() / scale, 1e-9);

        // square-unitary isometry case collapses to equality
        auto ri = isometry_jensen(catalog("pow", 3.0), A, gen_unitary(n, 830000 + t));
        note(ri.margin / std::max(1.0, std::abs(ri.rhs)), 1e-8);

        // eigenbasis-refined basis bound is tight for nonnegative f
        auto rp = peierls(catalog("pow", 3.0), A, eig(A).basis);
        note(rp.margin / std::max(1.0, std::abs(rp.rhs)), 1e-9);
    }
    const double secs = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst |relative margin| %.3e", worst);
    report("4 exactness-anchors", ok, secs, buf);
}

void criterion5() {
    const auto t0 = clk::now();
    bool ok = true;
    double worst_eig = 0.0, worst_transfer = 0.0;

    for (std::uint64_t t = 0; t < 1000; ++t) {
        const std::size_t n = 2 + t % 15; // up to 16
        CMat A = gen_hermitian(n, 400000 + t);
        Spectrum sp = eig(A);
        const double scale = std::max(1.0, A.frobenius());
        const double err =
            std::max((sp.reconstruct() - A).frobenius() / scale,
                     (sp.basis.adjoint() * sp.basis - CMat::identity(n)).frobenius());
        worst_eig = std::max(worst_eig, err);
        if (err > 1e-10) ok = false;
    }

    for (std::uint64_t t = 0; t < 1000; ++t) {
        const std::size_t n = 2 + t % 7;
        auto [x, y] = detail::gen_majorized_pair(n, 500000 + t);
        RMat P = hlp_transfer(x, y);
        if (!P.is_doubly_stochastic(1e-12, 1e-10)) ok = false;
        auto Py = P.apply(y);
        double scale = 1.0, err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            scale = std::max(scale, std::abs(y[i]));
            err = std::max(err, std::abs(Py[i] - x[i]));
        }
        worst_transfer = std::max(worst_transfer, err / scale);
        if (err > 1e-9 * scale) ok = false;
    }

    for (std::uint64_t t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 7; // up to 8
        Xoshiro256 rng(600000 + t);
        std::vector<std::vector<double>> cost(n, std::vector<double>(n));
        for (auto& row : cost)
            for (auto& v : row) v = rng.gaussian();
        for (auto mode : {MatchMode::Min, MatchMode::Max}) {
            auto a = detail::enumerate(cost, mode);
            auto b = mode == MatchMode::Min ? detail::assignment_min(cost) : [&] {
                auto neg = cost;
                for (auto& row : neg)
                    for (auto& v : row) v = -v;
                auto r = detail::assignment_min(neg);
                r.value = -r.value;
                return r;
            }();
            if (std::abs(a.value - b.value) > 1e-10) ok = false;
        }
    }

    const double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "worst eig err %.3e, worst transfer err %.3e", worst_eig,
                  worst_transfer);
    report("5 infrastructure-accuracy", ok, secs, buf);
}

void criterion6() {
    const auto t0 = clk::now();
    bool ok = true;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const std::size_t n = 2 + t % 5; // up to 6
        CMat A = gen_hermitian(n, 700000 + t);
        CMat B = gen_hermitian(n, 710000 + t);
        auto rep = eigen_majorization(A, B, 1e-9);
        if (!rep.diff_ok || !rep.sum_ok || !rep.abs_weak_ok) ok = false;
    }
    const double secs = seconds_since(t0);
    report("6 spectral-majorization-1000x", ok, secs, "difference, sum, weak-absolute");
}

void criterion7() {
    const auto t0 = clk::now();
    auto res = falsify_conjecture(10000, {3}, {}, 777);
    const double search_secs = seconds_since(t0);

    // both recorded worst witnesses must reproduce bit-exactly from their seeds
    auto rerun = [](const json& w, const char* key) {
        auto rep = run_instance(w.at("witnesses").at("inequality").get<std::string>(),
                                w.at("witnesses").at("function").get<std::string>(),
                                w.at("witnesses").at("n").get<std::size_t>(),
                                w.at("seed").get<std::uint64_t>());
        return rep.witnesses.at(key).get<double>();
    };
    const bool repro =
        rerun(res.worst_literal, "margin_scalar_literal") == res.min_margin_literal &&
        rerun(res.worst_normalized, "margin_scalar_normalized") == res.min_margin_normalized;

    const std::string note = res.to_json().at("note").get<std::string>();
    const bool ok = res.trials >= 10000 && search_secs < 60.0 && repro &&
                    note.find("search evidence") != std::string::npos;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "min margins: literal %.4e, normalized %.4e (search evidence only)",
                  res.min_margin_literal, res.min_margin_normalized);
    report("7 conjecture-harness-10000x", ok, seconds_since(t0), buf);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures ? 1 : 0;
}
