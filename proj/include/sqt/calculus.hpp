#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "sqt/complex_matrix.hpp"
#include "sqt/eig.hpp"
#include "sqt/errors.hpp"

namespace sqt {

// Eigenvalues in [-clamp_tol, 0) are treated as roundoff and clamped to 0
// before a [0,inf)-domain function is applied.
inline constexpr double kDomainClampTol = 1e-10;

inline double trace_of(const CMat& A) { return A.trace().real(); }

// f applied through the spectral decomposition. nonneg_domain rejects spectra
// below -kDomainClampTol and clamps the rest to 0.
inline CMat apply_function(const std::function<double(double)>& f, const CMat& A,
                           bool nonneg_domain = false, double tol = 1e-12) {
    Spectrum sp = eig(A, tol);
    std::vector<double> fv(sp.values.size());
    for (std::size_t k = 0; k < sp.values.size(); ++k) {
        double v = sp.values[k];
        if (nonneg_domain) {
            if (v < -kDomainClampTol)
                throw DomainViolation("apply_function: eigenvalue below domain [0,inf)");
            v = std::max(v, 0.0);
        }
        fv[k] = f(v);
    }
    return (sp.basis * CMat::diag(fv) * sp.basis.adjoint()).hermitian_part();
}

inline double trace_function(const std::function<double(double)>& f, const CMat& A,
                             bool nonneg_domain = false, double tol = 1e-12) {
    double s = 0.0;
    for (double v : eigenvalues(A, tol)) {
        if (nonneg_domain) {
            if (v < -kDomainClampTol)
                throw DomainViolation("trace_function: eigenvalue below domain [0,inf)");
            v = std::max(v, 0.0);
        }
        s += f(v);
    }
    return s;
}

inline CMat matrix_abs(const CMat& A) {
    return apply_function([](double t) { return std::abs(t); }, A);
}

inline CMat matrix_sqrt(const CMat& A) {
    return apply_function([](double t) { return std::sqrt(t); }, A, /*nonneg_domain=*/true);
}

// |X| = sqrt(X* X) for a general (possibly rectangular) X; result is cols x cols.
inline CMat polar_abs(const CMat& X) {
    return matrix_sqrt((X.adjoint() * X).hermitian_part());
}

inline double min_eigenvalue(const CMat& A, double tol = 1e-12) {
    auto v = eigenvalues(A, tol);
    return v.back();
}

inline bool is_psd(const CMat& A, double tol = 1e-10) {
    return min_eigenvalue(A) >= -tol;
}

} // namespace sqt
