#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sqt/complex_matrix.hpp"
#include "sqt/eig.hpp"
#include "sqt/errors.hpp"
#include "sqt/scalar_function.hpp"

namespace sqt {

// Dense real matrix, row-major. Used for doubly stochastic transfer matrices.
class RMat {
public:
    RMat() : n_(0) {}
    explicit RMat(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static RMat identity(std::size_t n) {
        RMat I(n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    RMat operator*(const RMat& o) const {
        RMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (std::size_t j = 0; j < n_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool is_doubly_stochastic(double entry_tol = 1e-12, double sum_tol = 1e-10) const {
        for (double v : a_)
            if (v < -entry_tol) return false;
        for (std::size_t i = 0; i < n_; ++i) {
            double rs = 0.0, cs = 0.0;
            for (std::size_t j = 0; j < n_; ++j) {
                rs += (*this)(i, j);
                cs += (*this)(j, i);
            }
            if (std::abs(rs - 1.0) > sum_tol || std::abs(cs - 1.0) > sum_tol) return false;
        }
        return true;
    }

private:
    std::size_t n_;
    std::vector<double> a_;
};

inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

inline std::vector<double> abs_of(std::vector<double> v) {
    for (auto& x : v) x = std::abs(x);
    return v;
}

// x majorized by y: partial sums of descending rearrangements dominated;
// totals equal unless weak.
inline bool majorizes(const std::vector<double>& y, const std::vector<double>& x,
                      bool weak = false, double tol = 1e-9) {
    if (x.size() != y.size()) throw LengthMismatch("majorizes: length mismatch");
    auto xd = sorted_desc(x), yd = sorted_desc(y);
    const double scale = std::max({1.0, std::abs(xd.front()), std::abs(yd.front()),
                                   std::abs(xd.back()), std::abs(yd.back())});
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < xd.size(); ++k) {
        sx += xd[k];
        sy += yd[k];
        if (sx > sy + tol * scale) return false;
    }
    if (!weak && std::abs(sx - sy) > tol * scale * xd.size()) return false;
    return true;
}

// Hardy-Littlewood-Polya transfer: x majorized by y gives P, a product of at
// most n-1 T-transforms (conjugated by sorting permutations), with P y = x.
inline RMat hlp_transfer(const std::vector<double>& x, const std::vector<double>& y,
                         double tol = 1e-9) {
    if (x.size() != y.size()) throw LengthMismatch("hlp_transfer: length mismatch");
    if (!majorizes(y, x, false, tol)) throw NotMajorized("hlp_transfer: x not majorized by y");
    const std::size_t n = x.size();

    std::vector<std::size_t> ix(n), iy(n);
    std::iota(ix.begin(), ix.end(), std::size_t{0});
    std::iota(iy.begin(), iy.end(), std::size_t{0});
    std::stable_sort(ix.begin(), ix.end(), [&](auto a, auto b) { return x[a] > x[b]; });
    std::stable_sort(iy.begin(), iy.end(), [&](auto a, auto b) { return y[a] > y[b]; });

    std::vector<double> xs(n), w(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = x[ix[k]];
        w[k] = y[iy[k]];
    }
    const double scale = std::max(1.0, std::abs(w.front()) + std::abs(w.back()));

    RMat P0 = RMat::identity(n);
    for (std::size_t step = 0; step + 1 < 2 * n; ++step) {
        std::ptrdiff_t j = -1;
        for (std::size_t a = 0; a < n; ++a)
            if (w[a] - xs[a] > tol * scale) j = static_cast<std::ptrdiff_t>(a);
        if (j < 0) break; // w == xs within tolerance
        std::ptrdiff_t k = -1;
        for (std::size_t a = static_cast<std::size_t>(j) + 1; a < n; ++a)
            if (xs[a] - w[a] > tol * scale) { k = static_cast<std::ptrdiff_t>(a); break; }
        if (k < 0)
            for (std::size_t a = 0; a < n; ++a)
                if (xs[a] - w[a] > tol * scale) { k = static_cast<std::ptrdiff_t>(a); break; }
        if (k < 0) break;
        const double d = std::min(w[j] - xs[j], xs[k] - w[k]);
        const double t = 1.0 - d / (w[j] - w[k]);
        RMat T = RMat::identity(n);
        T(j, j) = t; T(k, k) = t; T(j, k) = 1.0 - t; T(k, j) = 1.0 - t;
        w = T.apply(w);
        P0 = T * P0;
    }

    // un-permute: x = Sx^T P0 Sy y
    RMat P(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            P(ix[a], iy[b]) = P0(a, b);
    return P;
}

struct Lemma2Report {
    double lhs = 0.0, rhs = 0.0, margin = 0.0, correction = 0.0;
    bool passed = false;
    RMat P;
};

// Tr f(x) <= Tr f(y) - sum_ij p_ij f(|y_j - x_i|) for x majorized by y,
// both nonnegative, f superquadratic; P is the constructed transfer matrix.
inline Lemma2Report lemma2_bound(const ScalarFunction& f, const std::vector<double>& x,
                                 const std::vector<double>& y, double tol = 1e-9) {
    constexpr double clamp = 1e-10;
    for (double v : x)
        if (v < -clamp) throw DomainViolation("lemma2_bound: negative entry in x");
    for (double v : y)
        if (v < -clamp) throw DomainViolation("lemma2_bound: negative entry in y");

    Lemma2Report r;
    r.P = hlp_transfer(x, y, tol);
    const std::size_t n = x.size();
    double corr = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            corr += r.P(i, j) * f(std::abs(std::max(y[j], 0.0) - std::max(x[i], 0.0)));
    double fx = 0.0, fy = 0.0;
    for (double v : x) fx += f(std::max(v, 0.0));
    for (double v : y) fy += f(std::max(v, 0.0));
    r.lhs = fx;
    r.correction = corr;
    r.rhs = fy - corr;
    r.margin = r.rhs - r.lhs;
    r.passed = r.margin >= -tol;
    return r;
}

struct EigenMajorizationReport {
    bool diff_ok = false;       // l(A)-l(B) < l(A-B) < l(A)-l^(B)
    bool sum_ok = false;        // l(A)+l^(B) < l(A+B) < l(A)+l(B)
    bool abs_weak_ok = false;   // |l(B)-l(A)| <_w |l(A-B)|  (Lidskii direction)
    bool paper_literal_ok = false; // |l(A-B)| <_w |l(B)-l(A)| as printed; generally fails
};

inline EigenMajorizationReport eigen_majorization(const CMat& A, const CMat& B,
                                                  double tol = 1e-9) {
    if (A.rows() != B.rows()) throw DimensionMismatch("eigen_majorization: dim mismatch");
    const std::size_t n = A.rows();
    auto la = eigenvalues(A), lb = eigenvalues(B);
    auto ldiff = eigenvalues(A - B), lsum = eigenvalues(A + B);
    std::vector<double> lb_up(lb.rbegin(), lb.rend());

    std::vector<double> a_minus_b(n), a_minus_bup(n), a_plus_bup(n), a_plus_b(n), b_minus_a(n);
    for (std::size_t j = 0; j < n; ++j) {
        a_minus_b[j] = la[j] - lb[j];
        a_minus_bup[j] = la[j] - lb_up[j];
        a_plus_bup[j] = la[j] + lb_up[j];
        a_plus_b[j] = la[j] + lb[j];
        b_minus_a[j] = lb[j] - la[j];
    }

    EigenMajorizationReport r;
    r.diff_ok = majorizes(ldiff, a_minus_b, false, tol) &&
                majorizes(a_minus_bup, ldiff, false, tol);
    r.sum_ok = majorizes(lsum, a_plus_bup, false, tol) &&
               majorizes(a_plus_b, lsum, false, tol);
    r.abs_weak_ok = majorizes(abs_of(ldiff), abs_of(b_minus_a), true, tol);
    r.paper_literal_ok = majorizes(abs_of(b_minus_a), abs_of(ldiff), true, tol);
    return r;
}

} // namespace sqt
