#pragma once

// Test-only helpers. The Eigen routines here are an independent reference
// for the in-house Jacobi solver and the entropy code built on it.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "bellcoh/linalg.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh::testing {

template <std::size_t N>
Eigen::Matrix<std::complex<double>, N, N> to_eigen(const SquareMatrix<N>& m) {
    Eigen::Matrix<std::complex<double>, N, N> e;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) e(static_cast<int>(r), static_cast<int>(c)) = m(r, c);
    return e;
}

template <std::size_t N>
std::array<double, N> reference_eigenvalues(const SquareMatrix<N>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, N, N>> es(to_eigen(m));
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = es.eigenvalues()(static_cast<int>(i));
    return out;
}

template <std::size_t N>
double reference_entropy(const SquareMatrix<N>& m) {
    double s = 0.0;
    for (double v : reference_eigenvalues(m))
        if (v > 1e-300) s -= v * std::log2(v);
    return s;
}

template <std::size_t N>
std::array<double, N> sorted(std::array<double, N> v) {
    std::sort(v.begin(), v.end());
    return v;
}

template <std::size_t N>
double max_sorted_diff(const std::array<double, N>& a, const std::array<double, N>& b) {
    const auto sa = sorted(a);
    const auto sb = sorted(b);
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(sa[i] - sb[i]));
    return m;
}

// Random two-qubit density matrix G G^dagger / Tr, G complex Gaussian.
inline Mat4 random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Mat4 g;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) g(r, c) = Complex{n(rng), n(rng)};
    Mat4 m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= Complex{1.0 / tr};
    // Exact Hermitian symmetry.
    for (std::size_t r = 0; r < 4; ++r) {
        m(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < 4; ++c) m(c, r) = std::conj(m(r, c));
    }
    return m;
}

inline Mat2 ket_projector(Complex a, Complex b) {
    return Mat2{a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)};
}

// |0><0| (x) |+><+|
inline Mat4 zero_plus_product() {
    const double r = 1.0 / std::sqrt(2.0);
    return kron(ket_projector(1.0, 0.0), ket_projector(r, r));
}

// (|00> + |11>)(<00| + <11|) / 2
inline Mat4 bell_phi_plus() {
    Mat4 m;
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return m;
}

}  // namespace bellcoh::testing
