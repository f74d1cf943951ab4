#pragma once

// Entropy primitives. All logarithms are base 2.

#include <span>

#include "bellcoh/eigensolver.hpp"
#include "bellcoh/linalg.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh {

inline constexpr double kNegativeProbabilityTolerance = 1e-12;
inline constexpr double kDistributionSumTolerance = 1e-8;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;
inline constexpr double kSupportThreshold = 1e-12;

// x log2 x with 0 log 0 = 0.
double xlog2x(double x);

// -sum p_i log2 p_i. Entries in [-1e-12, 0) are treated as 0.
// Throws InvalidDistribution on more negative entries or when the sum is
// off by more than 1e-8.
double shannon_entropy(std::span<const double> p);

// Eigenvalues of a density operator with the rounding slack removed:
// values in [-1e-10, 0) become 0, anything below throws InvalidState.
template <std::size_t N>
std::array<double, N> spectrum(const SquareMatrix<N>& m);

template <std::size_t N>
double von_neumann_entropy(const SquareMatrix<N>& m);

double von_neumann_entropy(const DensityMatrix& m);

// S(rho || delta) = Tr(rho log2 rho - rho log2 delta). Throws
// InfiniteDivergence when rho has weight outside the support of delta.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& delta);

// (1-c)/2 log2(1-c) + (1+c)/2 log2(1+c); the Bell-diagonal classical
// correlation at c = max |c_k|. Throws DomainError outside [0, 1].
double cc_kernel(double c);

extern template std::array<double, 2> spectrum<2>(const Mat2&);
extern template std::array<double, 4> spectrum<4>(const Mat4&);
extern template double von_neumann_entropy<2>(const Mat2&);
extern template double von_neumann_entropy<4>(const Mat4&);

}  // namespace bellcoh
