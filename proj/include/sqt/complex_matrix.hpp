#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "sqt/errors.hpp"

namespace sqt {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Small sizes only (n <= 64).
class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx{0.0, 0.0}) {
        if (rows == 0 || cols == 0) throw BadDims("CMat: dims must be positive");
    }

    static CMat identity(std::size_t n) {
        CMat I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    static CMat diag(const std::vector<double>& d) {
        CMat D(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
        return D;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMat adjoint() const {
        CMat B(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                B(j, i) = std::conj((*this)(i, j));
        return B;
    }

    CMat operator+(const CMat& o) const {
        check_same_shape(o);
        CMat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    CMat operator-(const CMat& o) const {
        check_same_shape(o);
        CMat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    CMat operator*(const CMat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("CMat: product shape mismatch");
        CMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    friend CMat operator*(double s, const CMat& m) {
        CMat r = m;
        for (auto& z : r.a_) z *= s;
        return r;
    }

    friend CMat operator*(cplx s, const CMat& m) {
        CMat r = m;
        for (auto& z : r.a_) z *= s;
        return r;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    // Hermitian deviation relative to the Frobenius norm.
    double hermitian_deviation() const {
        if (rows_ != cols_) return std::numeric_limits<double>::infinity();
        double dev = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                dev += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
        return std::sqrt(dev) / std::max(1.0, frobenius());
    }

    bool is_hermitian(double tol = 1e-12) const {
        return rows_ == cols_ && hermitian_deviation() <= tol;
    }

    // Symmetrize roundoff: (A + A*)/2.
    CMat hermitian_part() const {
        if (rows_ != cols_) throw DimensionMismatch("hermitian_part: square required");
        CMat r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        return r;
    }

    cplx trace() const {
        if (rows_ != cols_) throw DimensionMismatch("trace: square required");
        cplx t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    void check_same_shape(const CMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("CMat: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

inline CMat require_hermitian(const CMat& A, double tol = 1e-12) {
    if (A.rows() != A.cols()) throw NotHermitian("matrix is not square");
    if (A.hermitian_deviation() > tol) throw NotHermitian("Hermitian symmetry violated");
    return A.hermitian_part();
}

} // namespace sqt
