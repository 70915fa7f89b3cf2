#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "sqt/suite.hpp"

using namespace sqt;

TEST_CASE("generator streams are deterministic") {
    Xoshiro256 a(12345), b(12345), c(54321);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next();
        all_equal = all_equal && (va == b.next());
        any_diff = any_diff || (va != c.next());
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("uniform and gaussian sanity") {
    Xoshiro256 rng(7);
    double mean = 0.0, var = 0.0;
    const int N = 20000;
    for (int i = 0; i < N; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double g = rng.gaussian();
        mean += g;
        var += g * g;
    }
    mean /= N;
    var = var / N - mean * mean;
    CHECK(std::abs(mean) < 0.05);
    CHECK(std::abs(var - 1.0) < 0.05);
}

TEST_CASE("per-trial seeds are order independent and well spread") {
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
    // no collisions over a small window
    std::vector<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 1000; ++t) seen.push_back(trial_seed(99, t));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("random matrix generators satisfy their contracts") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 5;
        CHECK(is_psd(gen_psd(n, 10 + t)));
        CHECK(gen_hermitian(n, 20 + t).is_hermitian(1e-12));
        const std::size_t m = 1 + t % n;
        CMat C = gen_isometry(n, m, 30 + t);
        CHECK((C.adjoint() * C - CMat::identity(m)).frobenius() < 1e-12);
        CMat U = gen_unitary(n, 40 + t);
        CHECK((U.adjoint() * U - CMat::identity(n)).frobenius() < 1e-12);
        auto rho = gen_density(n, 50 + t);
        CHECK(rho(CMat::identity(n)) == doctest::Approx(1.0).epsilon(1e-9));
        auto u = gen_unit_vector(n, 60 + t);
        double norm = 0.0;
        for (const auto& z : u) norm += std::norm(z);
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gen_isometry(2, 3, 1), BadDims);
}

TEST_CASE("run_instance is reproducible and seed sensitive") {
    for (const auto& ineq : all_inequalities()) {
        const auto funcs = default_functions_for(ineq);
        auto r1 = run_instance(ineq, funcs.front(), 3, 424242);
        auto r2 = run_instance(ineq, funcs.front(), 3, 424242);
        CHECK(r1.margin == r2.margin); // bit-exact
        CHECK(r1.lhs == r2.lhs);
        CHECK(r1.rhs == r2.rhs);
        auto r3 = run_instance(ineq, funcs.front(), 3, 424243);
        CHECK(r1.margin != r3.margin);
    }
    CHECK_THROWS_AS(run_instance("unknown_ineq", "pow:2", 3, 1), ConfigError);
}

TEST_CASE("suite runner aggregates and passes on a small config") {
    SuiteConfig cfg;
    cfg.trials = 3;
    cfg.seed = 2024;
    cfg.dims = {2, 3};
    auto res = run_suite(cfg);
    CHECK(res.stats.size() == all_inequalities().size());
    for (const auto& [name, st] : res.stats) {
        CHECK(st.trials >= 3);
        CHECK(st.passes == st.trials);
        CHECK(st.min_margin >= -1e-7);
    }
    CHECK(res.all_passed());
    auto j = res.to_json();
    CHECK(j.contains("peierls"));
    CHECK(j.at("peierls").at("passes").get<std::size_t>() ==
          res.stats.at("peierls").passes);

    SuiteConfig bad;
    bad.trials = 0;
    CHECK_THROWS_AS(run_suite(bad), ConfigError);
}

TEST_CASE("suite runner is reproducible") {
    SuiteConfig cfg;
    cfg.trials = 2;
    cfg.seed = 99;
    cfg.inequalities = {"klein_superquadratic", "peierls"};
    auto a = run_suite(cfg), b = run_suite(cfg);
    for (const auto& [name, st] : a.stats) {
        CHECK(st.min_margin == b.stats.at(name).min_margin);
        CHECK(st.worst_seed == b.stats.at(name).worst_seed);
    }
}

TEST_CASE("worked 2x2 examples reproduce") {
    auto rep = reproduce_examples();
    CHECK(rep.passed);
    CHECK(rep.lines.size() == 6);
    for (const auto& l : rep.lines) {
        INFO(l.label);
        CHECK(l.ok);
        CHECK(std::abs(l.computed - l.reference) <= l.allowed_delta);
    }
}

TEST_CASE("falsification search runs and reproduces its worst witnesses") {
    auto res = falsify_conjecture(30, {2, 3}, {"pow:3", "negpow:1.5"}, 321);
    CHECK(res.trials == 30);
    auto j = res.to_json();
    CHECK(j.at("note").get<std::string>().find("search evidence") != std::string::npos);

    // rerun the recorded worst literal-reading witness bit-exactly
    const auto& w = res.worst_literal;
    auto rep = run_instance(w.at("witnesses").at("inequality").get<std::string>(),
                            w.at("witnesses").at("function").get<std::string>(),
                            w.at("witnesses").at("n").get<std::size_t>(),
                            w.at("seed").get<std::uint64_t>());
    CHECK(rep.witnesses.at("margin_scalar_literal").get<double>() ==
          res.min_margin_literal);
}

TEST_CASE("matrix json round trip") {
    CMat A = gen_hermitian(3, 5);
    auto j = matrix_to_json(A);
    CMat B = matrix_from_json(j);
    CHECK((A - B).frobenius() == doctest::Approx(0.0));
    // re-only form
    nlohmann::json j2 = {{"n", 2}, {"re", {1.0, 2.0, 3.0, 4.0}}};
    CMat C = matrix_from_json(j2);
    CHECK(C(1, 0).real() == doctest::Approx(3.0));
    CHECK(C(1, 0).imag() == doctest::Approx(0.0));
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"n", 2}}), ConfigError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"n", 2}, {"re", {1.0}}}), ConfigError);
}
