#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "sqt/errors.hpp"

namespace sqt {

enum class MatchMode { Min, Max };

struct MatchingBound {
    std::vector<std::size_t> permutation; // row j pairs with column permutation[j]
    double value = 0.0;
    MatchMode mode = MatchMode::Min;
};

namespace detail {

// Kuhn-Munkres (Jonker-Volgenant style), minimizing; O(n^3).
inline MatchingBound assignment_min(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1), v(n + 1);
    std::vector<int> p(n + 1), way(n + 1);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j)
                if (!used[j]) {
                    double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                    if (minv[j] < delta) { delta = minv[j]; j1 = j; }
                }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    MatchingBound r;
    r.permutation.assign(n, 0);
    r.value = 0.0;
    for (int j = 1; j <= n; ++j)
        if (p[j]) {
            r.permutation[p[j] - 1] = static_cast<std::size_t>(j - 1);
            r.value += cost[p[j] - 1][j - 1];
        }
    return r;
}

inline MatchingBound enumerate(const std::vector<std::vector<double>>& cost, MatchMode mode) {
    const std::size_t n = cost.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    MatchingBound best;
    best.mode = mode;
    bool first = true;
    do {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += cost[j][perm[j]];
        const bool better = mode == MatchMode::Min ? v < best.value : v > best.value;
        if (first || better) {
            best.value = v;
            best.permutation = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace detail

// Optimal bijective pairing of rows with columns. Exhaustive at n <= 8,
// Kuhn-Munkres beyond.
inline MatchingBound optimal_matching(const std::vector<std::vector<double>>& cost,
                                      MatchMode mode = MatchMode::Min) {
    const std::size_t n = cost.size();
    for (const auto& row : cost)
        if (row.size() != n) throw BadDims("optimal_matching: square grid required");
    if (n == 0) throw BadDims("optimal_matching: empty grid");
    if (n <= 8) return detail::enumerate(cost, mode);
    if (mode == MatchMode::Min) {
        MatchingBound r = detail::assignment_min(cost);
        r.mode = mode;
        return r;
    }
    auto neg = cost;
    for (auto& row : neg)
        for (auto& v : row) v = -v;
    MatchingBound r = detail::assignment_min(neg);
    r.value = -r.value;
    r.mode = mode;
    return r;
}

} // namespace sqt
