#pragma once

// Cyclic complex Jacobi eigensolver for small Hermitian matrices.

#include <array>
#include <cmath>
#include <cstddef>

#include "bellcoh/error.hpp"
#include "bellcoh/linalg.hpp"

namespace bellcoh {

template <std::size_t N>
struct HermitianEigen {
    std::array<double, N> values{};  // unsorted, matching columns of vectors
    SquareMatrix<N> vectors;         // unitary; column k is the eigenvector of values[k]
    int sweeps = 0;
};

inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 50;

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Diagonalizes a Hermitian matrix by plane rotations. Each rotation first
// removes the phase of the pivot, then applies the small-angle real Jacobi
// rotation, so a' = U^dagger a U with U unitary.
template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const SquareMatrix<N>& input) {
    SquareMatrix<N> a = input;
    for (std::size_t i = 0; i < N; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < N; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    HermitianEigen<N> out;
    out.vectors = SquareMatrix<N>::identity();

    int sweep = 0;
    while (off_diagonal_norm(a) >= kJacobiTolerance) {
        if (sweep == kJacobiMaxSweeps) throw NoConvergence("Jacobi eigensolver did not converge");
        ++sweep;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                const Complex phase = a(p, q) / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * mag);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Columns p, q of U: U_pp = c, U_qp = -s e^{-i phi}, U_pq = s, U_qq = c e^{-i phi}.
                const Complex upp = c;
                const Complex uqp = -s * std::conj(phase);
                const Complex upq = s;
                const Complex uqq = c * std::conj(phase);

                // a <- a U (columns p, q)
                for (std::size_t r = 0; r < N; ++r) {
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = arp * upp + arq * uqp;
                    a(r, q) = arp * upq + arq * uqq;
                }
                // a <- U^dagger a (rows p, q)
                for (std::size_t col = 0; col < N; ++col) {
                    const Complex apc = a(p, col);
                    const Complex aqc = a(q, col);
                    a(p, col) = std::conj(upp) * apc + std::conj(uqp) * aqc;
                    a(q, col) = std::conj(upq) * apc + std::conj(uqq) * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t r = 0; r < N; ++r) {
                    const Complex vrp = out.vectors(r, p);
                    const Complex vrq = out.vectors(r, q);
                    out.vectors(r, p) = vrp * upp + vrq * uqp;
                    out.vectors(r, q) = vrp * upq + vrq * uqq;
                }
            }
        }
    }
    for (std::size_t i = 0; i < N; ++i) out.values[i] = a(i, i).real();
    out.sweeps = sweep;
    return out;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N>& m) {
    return hermitian_eigen(m).values;
}

}  // namespace bellcoh
