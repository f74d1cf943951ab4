#pragma once

// Correlation and coherence measures. The BellDiagonalParams overloads are
// closed forms; the DensityMatrix overloads work on explicit matrices.

#include <array>
#include <string>

#include "bellcoh/linalg.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh {

struct MeasureSet {
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double discord = 0.0;
    std::array<double, 3> coherence_rel{};  // indexed by axis_index
    std::array<double, 3> coherence_l1{};
};

double mutual_information(const BellDiagonalParams& p);
double classical_correlation(const BellDiagonalParams& p);
double quantum_discord(const BellDiagonalParams& p);
double coherence_rel(const BellDiagonalParams& p, PauliAxis axis);

// l1 coherence of the axis representation, i.e. the sum of its off-diagonal
// moduli. Equals max of the other two |c_k|.
double coherence_l1(const BellDiagonalParams& p, PauliAxis axis);

// All of the above; throws NonPhysicalState once.
MeasureSet measure_all(const BellDiagonalParams& p);

// Entropy of the dephased Bell-diagonal state in the given axis
// representation: the diagonal is ((1+c)/4, (1-c)/4, (1-c)/4, (1+c)/4).
double dephased_entropy(double c);

// Local orthonormal product basis. Columns of `a` and `b` are the basis
// vectors of qubit A and qubit B.
struct ProductBasis {
    Mat2 a = Mat2::identity();
    Mat2 b = Mat2::identity();

    Mat4 unitary() const { return kron(a, b); }
};

ProductBasis computational_basis();

// Eigenbasis of sigma_k on both qubits.
ProductBasis pauli_basis(PauliAxis axis);

// Diagonal of U^dagger m U for U = basis.unitary().
std::array<double, 4> diagonal_in_basis(const Mat4& m, const ProductBasis& basis);

// S(m dephased in basis) - S(m). Throws InvalidBasis when the basis is not
// orthonormal within 1e-10.
double coherence_rel_matrix(const DensityMatrix& m, const ProductBasis& basis);

// Single-qubit analog on a reduced state.
double coherence_rel_qubit(const Mat2& rho, const Mat2& basis);

// Raw sum of off-diagonal moduli in the computational basis.
double coherence_l1_matrix(const DensityMatrix& m);

// Axis carrying max |c_k|; exact ties go to the lowest axis.
PauliAxis optimal_axis(const BellDiagonalParams& p);

inline constexpr double kRegionBoundaryTolerance = 1e-9;

struct Region {
    PauliAxis axis = PauliAxis::Axis1;
    bool boundary = false;  // two largest |c_k| within 1e-9

    // "C1", "C2", "C3" or "BOUNDARY".
    std::string label() const;
};

Region classify_region(const BellDiagonalParams& p);

}  // namespace bellcoh
