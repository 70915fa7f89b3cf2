#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sqt/complex_matrix.hpp"
#include "sqt/errors.hpp"

namespace sqt {

// Eigenvalues descending, columns of basis are the matching orthonormal eigenvectors.
struct Spectrum {
    std::vector<double> values;
    CMat basis;

    CMat reconstruct() const {
        const std::size_t n = values.size();
        CMat D = CMat::diag(values);
        return basis * D * basis.adjoint();
    }
};

namespace detail {

inline double offdiag_frobenius(const CMat& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (i != j) s += std::norm(A(i, j));
    return std::sqrt(s);
}

} // namespace detail

// Cyclic Jacobi for complex Hermitian matrices. Stops when the off-diagonal
// Frobenius norm falls below tol * ||A||_F; capped at 100 sweeps.
inline Spectrum eig(const CMat& A_in, double tol = 1e-12) {
    CMat A = require_hermitian(A_in);
    const std::size_t n = A.rows();
    CMat V = CMat::identity(n);
    const double scale = std::max(A.frobenius(), 1e-300);
    const double stop = std::max(tol, 1e-15) * scale;

    const int max_sweeps = 100;
    int sweep = 0;
    while (detail::offdiag_frobenius(A) > stop) {
        if (++sweep > max_sweeps) throw NoConvergence("eig: sweep cap reached");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = A(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                // Phase out A(p,q), then a real Jacobi rotation on the 2x2 block.
                const cplx phase = apq / r;                       // e^{i phi}
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const double theta = (app - aqq) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U2 = [[ c*ph, -s*ph ], [ s*conj(ph)... ]] realized through
                // column updates: col_p <- c*col_p + s*conj(phase)*col_q,
                //                 col_q <- -s*phase*col_p + c*col_q.
                const cplx up = s * std::conj(phase);
                const cplx uq = -s * phase;
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = A(i, p), aiq = A(i, q);
                    A(i, p) = c * aip + up * aiq;
                    A(i, q) = uq * aip + c * aiq;
                    const cplx vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip + up * viq;
                    V(i, q) = uq * vip + c * viq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = A(p, j), aqj = A(q, j);
                    A(p, j) = c * apj + std::conj(up) * aqj;
                    A(q, j) = std::conj(uq) * apj + c * aqj;
                }
            }
        }
    }

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = A(i, i).real();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });

    Spectrum sp;
    sp.values.resize(n);
    sp.basis = CMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sp.values[k] = vals[order[k]];
        for (std::size_t i = 0; i < n; ++i) sp.basis(i, k) = V(i, order[k]);
    }
    return sp;
}

inline std::vector<double> eigenvalues(const CMat& A, double tol = 1e-12) {
    return eig(A, tol).values;
}

} // namespace sqt
