#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sqt/scalar_function.hpp"

using namespace sqt;

TEST_CASE("catalog evaluation and derivatives") {
    auto f3 = catalog("pow", 3.0);
    CHECK(f3(2.0) == doctest::Approx(8.0));
    CHECK(f3.deriv(2.0) == doctest::Approx(12.0));
    CHECK(f3.subgradient_constant(2.0) == doctest::Approx(12.0));
    CHECK(f3(0.0) == doctest::Approx(0.0));
    CHECK(f3.deriv(0.0) == doctest::Approx(0.0));

    auto fn = catalog("negpow", 1.5);
    CHECK(fn(4.0) == doctest::Approx(-8.0));
    CHECK(fn.deriv(4.0) == doctest::Approx(-3.0));

    auto fa = catalog("abspow", 1.5);
    CHECK(fa(4.0) == doctest::Approx(8.0));
    CHECK(fa.deriv(0.0) == doctest::Approx(0.0));

    auto ft = catalog("tlogt");
    CHECK(ft(1.0) == doctest::Approx(0.0));
    CHECK(ft(0.0) == doctest::Approx(0.0)); // 0 log 0 := 0
    CHECK(ft.deriv(1.0) == doctest::Approx(1.0));

    auto sq = catalog("square");
    CHECK(sq.name == "pow:2");
    CHECK(sq(3.0) == doctest::Approx(9.0));
}

TEST_CASE("catalog parameter validation") {
    CHECK_THROWS_AS(catalog("pow", 1.5), ParameterOutOfRange);
    CHECK_THROWS_AS(catalog("negpow", 0.5), ParameterOutOfRange);
    CHECK_THROWS_AS(catalog("negpow", 2.5), ParameterOutOfRange);
    CHECK_THROWS_AS(catalog("abspow", 0.5), ParameterOutOfRange);
    CHECK_THROWS_AS(catalog("nope"), UnknownName);
}

TEST_CASE("catalog_parse keeps the spec string") {
    auto f = catalog_parse("pow:3");
    CHECK(f.name == "pow:3");
    CHECK(f(2.0) == doctest::Approx(8.0));
    auto g = catalog_parse("negpow:1.5");
    CHECK(g.name == "negpow:1.5");
    auto h = catalog_parse("tlogt");
    CHECK(h.name == "tlogt");
    CHECK_THROWS_AS(catalog_parse("pow:notanumber"), std::invalid_argument);
}

TEST_CASE("standard grid shape") {
    auto g = standard_grid();
    CHECK(g.size() == 101);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(10.0));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK(g[1] == doctest::Approx(1e-4));
}

TEST_CASE("superquadratic members verify on the grid") {
    auto grid = standard_grid();
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
        auto f = catalog("pow", p);
        CHECK(f.claims_superquadratic);
        auto r = check_superquadratic(f, grid);
        CHECK(r.passed);
    }
    for (double p : {1.0, 1.5, 2.0}) {
        auto f = catalog("negpow", p);
        CHECK(f.claims_superquadratic);
        CHECK(check_superquadratic(f, grid).passed);
    }
    CHECK(catalog("abspow", 2.0).claims_superquadratic);
    CHECK(check_superquadratic(catalog("abspow", 2.0), grid).passed);
}

TEST_CASE("non-superquadratic members fail with a witness") {
    auto grid = standard_grid();

    auto lin = catalog("linear");
    CHECK_FALSE(lin.claims_superquadratic);
    auto r = check_superquadratic(lin, grid);
    CHECK_FALSE(r.passed);
    CHECK(r.worst < -1e-6);
    // the recorded witness reproduces the violation
    const double s = r.witness.first, t = r.witness.second;
    CHECK(lin(t) - (lin(s) + lin.subgradient_constant(s) * (t - s) + lin(std::abs(t - s))) ==
          doctest::Approx(r.worst));

    auto fa = catalog("abspow", 1.5);
    CHECK_FALSE(fa.claims_superquadratic);
    CHECK_FALSE(check_superquadratic(fa, grid).passed);

    auto ft = catalog("tlogt");
    CHECK_FALSE(ft.claims_superquadratic);
    CHECK_FALSE(check_superquadratic(ft, grid).passed);
}

TEST_CASE("convexity checks") {
    auto grid = standard_grid();
    for (const char* name : {"tlogt", "linear"}) {
        auto f = catalog(name);
        CHECK(f.claims_convex);
        CHECK(check_convex(f, grid).passed);
    }
    for (double p : {2.0, 2.5, 3.0, 4.0}) CHECK(check_convex(catalog("pow", p), grid).passed);
    CHECK(check_convex(catalog("abspow", 1.2), grid).passed);
    // concave member fails midpoint convexity
    auto fn = catalog("negpow", 1.5);
    CHECK_FALSE(fn.claims_convex);
    CHECK_FALSE(check_convex(fn, grid).passed);
}

TEST_CASE("superquadratic defining inequality spot values") {
    // f=t^2: slack is identically zero (t^2 = s^2 + 2s(t-s) + (t-s)^2)
    auto sq = catalog("square");
    for (double s : {0.0, 0.3, 1.0, 4.0})
        for (double t : {0.0, 0.5, 2.0, 7.0})
            CHECK(sq(t) - (sq(s) + sq.subgradient_constant(s) * (t - s) + sq(std::abs(t - s))) ==
                  doctest::Approx(0.0).scale(1.0 + t * t));
    auto r = check_superquadratic(sq, standard_grid(), 1e-9);
    CHECK(r.passed);
    CHECK(std::abs(r.worst) <= 1e-9);
}
