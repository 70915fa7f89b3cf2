#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "sqt/calculus.hpp"
#include "sqt/complex_matrix.hpp"
#include "sqt/errors.hpp"

namespace sqt {

// Unital positive linear map Phi: M_n -> M_m. Kraus orientation
// Phi(X) = sum V_i X V_i* with sum V_i V_i* = I_m (unitality enforced).
class UnitalPositiveMap {
public:
    static UnitalPositiveMap identity_map(std::size_t n) {
        UnitalPositiveMap m;
        m.kind_ = Kind::Identity;
        m.in_ = m.out_ = n;
        return m;
    }

    static UnitalPositiveMap kraus(std::vector<CMat> terms, double tol = 1e-10) {
        if (terms.empty()) throw BadDims("kraus: empty family");
        UnitalPositiveMap m;
        m.kind_ = Kind::Kraus;
        m.out_ = terms.front().rows();
        m.in_ = terms.front().cols();
        CMat s(m.out_, m.out_);
        for (const auto& V : terms) {
            if (V.rows() != m.out_ || V.cols() != m.in_)
                throw DimensionMismatch("kraus: inconsistent term shapes");
            s = s + V * V.adjoint();
        }
        if ((s - CMat::identity(m.out_)).frobenius() > tol * std::sqrt(double(m.out_)))
            throw DimensionMismatch("kraus: sum V V* != I (not unital)");
        m.terms_ = std::move(terms);
        return m;
    }

    // projections must be mutually orthogonal and sum to I
    static UnitalPositiveMap pinching(std::vector<CMat> projections, double tol = 1e-10) {
        if (projections.empty()) throw BadDims("pinching: empty family");
        UnitalPositiveMap m;
        m.kind_ = Kind::Pinching;
        m.in_ = m.out_ = projections.front().rows();
        CMat s(m.in_, m.in_);
        for (const auto& P : projections) {
            if (P.rows() != m.in_ || P.cols() != m.in_)
                throw DimensionMismatch("pinching: inconsistent shapes");
            if ((P * P - P).frobenius() > tol * std::sqrt(double(m.in_)))
                throw DimensionMismatch("pinching: not a projection");
            s = s + P;
        }
        if ((s - CMat::identity(m.in_)).frobenius() > tol * std::sqrt(double(m.in_)))
            throw DimensionMismatch("pinching: projections do not sum to I");
        m.terms_ = std::move(projections);
        return m;
    }

    std::size_t input_dim() const { return in_; }
    std::size_t output_dim() const { return out_; }

    CMat operator()(const CMat& A) const {
        if (A.rows() != in_ || A.cols() != in_)
            throw DimensionMismatch("apply_map: input dim mismatch");
        switch (kind_) {
            case Kind::Identity:
                return A;
            case Kind::Kraus: {
                CMat r(out_, out_);
                for (const auto& V : terms_) r = r + V * A * V.adjoint();
                return r.hermitian_part();
            }
            case Kind::Pinching: {
                CMat r(out_, out_);
                for (const auto& P : terms_) r = r + P * A * P;
                return r.hermitian_part();
            }
        }
        throw ConfigError("apply_map: unreachable");
    }

private:
    enum class Kind { Identity, Kraus, Pinching };
    Kind kind_ = Kind::Identity;
    std::size_t in_ = 0, out_ = 0;
    std::vector<CMat> terms_;
};

inline CMat apply_map(const UnitalPositiveMap& phi, const CMat& A) { return phi(A); }

// State tau: positive linear functional with tau(I) = 1.
class State {
public:
    static State density(CMat rho, double tol = 1e-10) {
        if (std::abs(rho.trace().real() - 1.0) > tol)
            throw DimensionMismatch("density: trace != 1");
        State s;
        s.kind_ = Kind::Density;
        s.dim_ = rho.rows();
        s.rho_ = std::move(rho);
        return s;
    }

    static State vector_state(std::vector<cplx> u, double tol = 1e-12) {
        double norm = 0.0;
        for (const auto& z : u) norm += std::norm(z);
        if (std::abs(std::sqrt(norm) - 1.0) > tol)
            throw DimensionMismatch("vector_state: not a unit vector");
        State s;
        s.kind_ = Kind::Vector;
        s.dim_ = u.size();
        s.u_ = std::move(u);
        return s;
    }

    static State normalized_trace(std::size_t n) {
        State s;
        s.kind_ = Kind::NormalizedTrace;
        s.dim_ = n;
        return s;
    }

    std::size_t dim() const { return dim_; }

    double operator()(const CMat& X) const {
        if (X.rows() != dim_ || X.cols() != dim_)
            throw DimensionMismatch("state_eval: dim mismatch");
        switch (kind_) {
            case Kind::Density:
                return (rho_ * X).trace().real();
            case Kind::Vector: {
                cplx s{};
                for (std::size_t i = 0; i < dim_; ++i)
                    for (std::size_t j = 0; j < dim_; ++j)
                        s += std::conj(u_[i]) * X(i, j) * u_[j];
                return s.real();
            }
            case Kind::NormalizedTrace:
                return X.trace().real() / static_cast<double>(dim_);
        }
        throw ConfigError("state_eval: unreachable");
    }

private:
    enum class Kind { Density, Vector, NormalizedTrace };
    Kind kind_ = Kind::NormalizedTrace;
    std::size_t dim_ = 0;
    CMat rho_;
    std::vector<cplx> u_;
};

inline double state_eval(const State& tau, const CMat& X) { return tau(X); }

} // namespace sqt
