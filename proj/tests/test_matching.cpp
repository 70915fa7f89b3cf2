#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sqt/matching.hpp"
#include "sqt/rng.hpp"

using namespace sqt;

TEST_CASE("two-by-two anchor grid") {
    // max matching of [[1,1],[3*sqrt(3),1]] is the off-diagonal pairing 1+3*sqrt(3)
    const double v = 3.0 * std::sqrt(3.0);
    std::vector<std::vector<double>> cost = {{1.0, 1.0}, {v, 1.0}};
    auto mx = optimal_matching(cost, MatchMode::Max);
    CHECK(mx.value == doctest::Approx(1.0 + v).epsilon(1e-12));
    CHECK(mx.permutation == std::vector<std::size_t>{1, 0});
    auto mn = optimal_matching(cost, MatchMode::Min);
    CHECK(mn.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mn.permutation == std::vector<std::size_t>{0, 1});
}

TEST_CASE("degenerate and invalid grids") {
    CHECK(optimal_matching({{7.0}}, MatchMode::Min).value == doctest::Approx(7.0));
    CHECK_THROWS_AS(optimal_matching({}, MatchMode::Min), BadDims);
    CHECK_THROWS_AS(optimal_matching({{1.0, 2.0}}, MatchMode::Min), BadDims);
}

namespace {

std::vector<std::vector<double>> random_grid(std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (auto& row : cost)
        for (auto& v : row) v = rng.gaussian();
    return cost;
}

double perm_value(const std::vector<std::vector<double>>& cost,
                  const std::vector<std::size_t>& perm) {
    double v = 0.0;
    for (std::size_t j = 0; j < perm.size(); ++j) v += cost[j][perm[j]];
    return v;
}

bool is_permutation(const std::vector<std::size_t>& p) {
    std::vector<char> seen(p.size(), 0);
    for (auto j : p) {
        if (j >= p.size() || seen[j]) return false;
        seen[j] = 1;
    }
    return true;
}

} // namespace

TEST_CASE("assignment solver agrees with enumeration on small grids") {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 7; // up to 8
        auto cost = random_grid(n, 1000 + t);
        auto enumd = detail::enumerate(cost, MatchMode::Min);
        auto solved = detail::assignment_min(cost);
        CHECK(solved.value == doctest::Approx(enumd.value).epsilon(1e-10));
        CHECK(is_permutation(solved.permutation));
        CHECK(perm_value(cost, solved.permutation) ==
              doctest::Approx(solved.value).epsilon(1e-12));
    }
}

TEST_CASE("max mode via negation matches enumeration") {
    for (std::uint64_t t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 6;
        auto cost = random_grid(n, 2000 + t);
        auto enumd = detail::enumerate(cost, MatchMode::Max);
        auto got = optimal_matching(cost, MatchMode::Max);
        CHECK(got.value == doctest::Approx(enumd.value).epsilon(1e-10));
        CHECK(is_permutation(got.permutation));
    }
}

TEST_CASE("large grids use the polynomial solver and return consistent optima") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        const std::size_t n = 9 + t % 4; // beyond the enumeration cutoff
        auto cost = random_grid(n, 3000 + t);
        auto mn = optimal_matching(cost, MatchMode::Min);
        auto mx = optimal_matching(cost, MatchMode::Max);
        CHECK(is_permutation(mn.permutation));
        CHECK(is_permutation(mx.permutation));
        CHECK(perm_value(cost, mn.permutation) == doctest::Approx(mn.value).epsilon(1e-10));
        CHECK(perm_value(cost, mx.permutation) == doctest::Approx(mx.value).epsilon(1e-10));
        CHECK(mn.value <= mx.value + 1e-12);
        // optimum beats 50 random permutations
        Xoshiro256 rng(4000 + t);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (int k = 0; k < 50; ++k) {
            for (std::size_t i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.next() % (i + 1)]);
            const double v = perm_value(cost, perm);
            CHECK(mn.value <= v + 1e-10);
            CHECK(mx.value >= v - 1e-10);
        }
    }
}
