#pragma once

#include <array>
#include <random>
#include <string>

#include "bellcoh/linalg.hpp"

namespace bellcoh {

// Which of the three mutually unbiased Pauli eigenbases a basis-dependent
// quantity refers to. The numeric values are the axis labels used in output.
enum class PauliAxis : int { Axis1 = 1, Axis2 = 2, Axis3 = 3 };

inline constexpr std::array<PauliAxis, 3> kAllAxes{PauliAxis::Axis1, PauliAxis::Axis2, PauliAxis::Axis3};

constexpr int axis_number(PauliAxis a) { return static_cast<int>(a); }
constexpr std::size_t axis_index(PauliAxis a) { return static_cast<std::size_t>(a) - 1; }

// Bell-diagonal state rho = (I + sum_j c_j sigma_j (x) sigma_j) / 4.
struct BellDiagonalParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    double operator[](PauliAxis a) const {
        switch (a) {
            case PauliAxis::Axis1: return c1;
            case PauliAxis::Axis2: return c2;
            case PauliAxis::Axis3: return c3;
        }
        return 0.0;
    }
    double& operator[](PauliAxis a) {
        switch (a) {
            case PauliAxis::Axis1: return c1;
            case PauliAxis::Axis2: return c2;
            default: return c3;
        }
    }
    double max_abs() const;

    friend bool operator==(const BellDiagonalParams&, const BellDiagonalParams&) = default;
};

inline constexpr double kPhysicalTolerance = 1e-12;

// Eigenvalues in the order lambda_00, lambda_01, lambda_10, lambda_11.
std::array<double, 4> bell_eigenvalues(const BellDiagonalParams& p);

bool is_physical(const BellDiagonalParams& p);

// Throws NonPhysicalState unless is_physical(p).
void require_physical(const BellDiagonalParams& p);

// Two-qubit density matrix. Construction validates Hermiticity (1e-12),
// unit trace (1e-12) and positivity (eigenvalues >= -1e-10); failures throw
// InvalidState.
class DensityMatrix {
public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kEigenvalueFloor = -1e-10;

    explicit DensityMatrix(const Mat4& m);

    const Mat4& matrix() const { return m_; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    Mat4 m_;
};

// Explicit Bell-diagonal matrix in the given Pauli representation, without
// the physicality check.
Mat4 bell_matrix(const BellDiagonalParams& p, PauliAxis axis);

// Throws NonPhysicalState for tuples outside the tetrahedron.
DensityMatrix to_density_matrix(const BellDiagonalParams& p, PauliAxis axis = PauliAxis::Axis3);

struct BellProjection {
    BellDiagonalParams params;
    double residual = 0.0;  // max entrywise |m - bell_matrix(params, Axis3)|
    bool is_bell_diagonal = false;
};

inline constexpr double kBellDiagonalTolerance = 1e-10;

// c_j = Tr[m (sigma_j (x) sigma_j)], plus how far m is from that Bell-diagonal state.
BellProjection from_density_matrix(const DensityMatrix& m);

// As from_density_matrix, but throws NotBellDiagonal when the residual
// exceeds kBellDiagonalTolerance.
BellDiagonalParams require_bell_diagonal(const DensityMatrix& m);

enum class Subsystem { A, B };

// Partial trace over the complementary qubit.
Mat2 reduced_state(const Mat4& m, Subsystem keep);
Mat2 reduced_state(const DensityMatrix& m, Subsystem keep);

// Uniform in the tetrahedron by rejection from [-1, 1]^3.
BellDiagonalParams random_physical_params(std::mt19937_64& rng);

std::string to_string(const BellDiagonalParams& p);

}  // namespace bellcoh
