#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sqt/calculus.hpp"
#include "sqt/complex_matrix.hpp"
#include "sqt/errors.hpp"
#include "sqt/maps_states.hpp"

namespace sqt {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman & Vigna), seeded through splitmix64.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& s : s_) s = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform() { // in [0,1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    cplx cgaussian() { return cplx(gaussian(), gaussian()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4]{};
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Per-trial stream: trials are order-independent and parallelizable.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s = h ^ (trial_index * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    return splitmix64(s);
}

inline CMat gen_gaussian(std::size_t rows, std::size_t cols, Xoshiro256& rng) {
    if (rows == 0 || cols == 0) throw BadDims("gen_gaussian: dims must be positive");
    CMat G(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) G(i, j) = rng.cgaussian();
    return G;
}

inline CMat gen_psd(std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    CMat G = gen_gaussian(n, n, rng);
    return (G * G.adjoint()).hermitian_part();
}

inline CMat gen_hermitian(std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    CMat G = gen_gaussian(n, n, rng);
    return (G + G.adjoint()).hermitian_part();
}

// Gram-Schmidt on Gaussian columns: Haar-distributed isometry n x m, m <= n.
inline CMat gen_isometry(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m > n) throw BadDims("gen_isometry: m must not exceed n");
    Xoshiro256 rng(seed);
    CMat G = gen_gaussian(n, m, rng);
    for (std::size_t j = 0; j < m; ++j) {
        for (int pass = 0; pass < 2; ++pass) { // reorthogonalize once
            for (std::size_t k = 0; k < j; ++k) {
                cplx dot{};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(G(i, k)) * G(i, j);
                for (std::size_t i = 0; i < n; ++i) G(i, j) -= dot * G(i, k);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(G(i, j));
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw NoConvergence("gen_isometry: degenerate draw");
        for (std::size_t i = 0; i < n; ++i) G(i, j) /= norm;
    }
    return G;
}

inline CMat gen_unitary(std::size_t n, std::uint64_t seed) { return gen_isometry(n, n, seed); }

// orthonormal basis of C^n as columns
inline CMat gen_basis(std::size_t n, std::uint64_t seed) { return gen_unitary(n, seed); }

inline State gen_density(std::size_t n, std::uint64_t seed) {
    CMat A = gen_psd(n, seed);
    const double tr = A.trace().real();
    return State::density((1.0 / tr) * A);
}

inline std::vector<cplx> gen_unit_vector(std::size_t n, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<cplx> u(n);
    double norm = 0.0;
    for (auto& z : u) {
        z = rng.cgaussian();
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto& z : u) z /= norm;
    return u;
}

// k square matrices with sum C_i* C_i = I, by C_i = G_i (sum G_j* G_j)^{-1/2}.
inline std::vector<CMat> gen_kraus_family(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0) throw BadDims("gen_kraus_family: k must be positive");
    Xoshiro256 rng(seed);
    std::vector<CMat> G;
    G.reserve(k);
    CMat S(n, n);
    for (std::size_t i = 0; i < k; ++i) {
        G.push_back(gen_gaussian(n, n, rng));
        S = S + G.back().adjoint() * G.back();
    }
    CMat Sinvhalf = apply_function([](double t) { return 1.0 / std::sqrt(t); },
                                   S.hermitian_part(), /*nonneg_domain=*/true);
    for (auto& Gi : G) Gi = Gi * Sinvhalf;
    return G;
}

// Unital map with r Kraus terms M_n -> M_n: V_i = W_i (sum W_j W_j*)^{-1/2}
// applied on the left so that sum V_i V_i* = I.
inline UnitalPositiveMap gen_kraus_map(std::size_t n, std::size_t r, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<CMat> W;
    CMat S(n, n);
    for (std::size_t i = 0; i < r; ++i) {
        W.push_back(gen_gaussian(n, n, rng));
        S = S + W.back() * W.back().adjoint();
    }
    CMat Sinvhalf = apply_function([](double t) { return 1.0 / std::sqrt(t); },
                                   S.hermitian_part(), /*nonneg_domain=*/true);
    for (auto& Wi : W) Wi = Sinvhalf * Wi;
    return UnitalPositiveMap::kraus(std::move(W));
}

// Pinching onto k random mutually orthogonal subspaces (sizes as equal as possible).
inline UnitalPositiveMap gen_pinching(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > n) throw BadDims("gen_pinching: need 1 <= k <= n");
    CMat U = gen_unitary(n, seed);
    std::vector<CMat> projs;
    std::size_t start = 0;
    for (std::size_t b = 0; b < k; ++b) {
        std::size_t len = n / k + (b < n % k ? 1 : 0);
        CMat P(n, n);
        for (std::size_t c = start; c < start + len; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    P(i, j) += U(i, c) * std::conj(U(j, c));
        projs.push_back(P.hermitian_part());
        start += len;
    }
    return UnitalPositiveMap::pinching(std::move(projs));
}

} // namespace sqt
