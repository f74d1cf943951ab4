#pragma once

// Numerical discord by brute-force minimization over projective
// measurement bases, and executable checks of the discord/coherence
// identities for general two-qubit matrices.

#include <array>
#include <optional>
#include <vector>

#include "bellcoh/linalg.hpp"
#include "bellcoh/measures.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh {

// Rank-1 projective qubit measurement along the Bloch direction (theta, phi).
struct QubitMeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    // Columns |+> = cos(t/2)|0> + e^{i phi} sin(t/2)|1> and its complement.
    Mat2 vectors() const;
    std::array<Mat2, 2> projectors() const;

    // Same measurement with theta in [0, pi] and phi in [0, 2 pi).
    QubitMeasurementBasis normalized() const;
};

struct GridSpec {
    int n_theta = 64;
    int n_phi = 64;
    int refine_iters = 3;
    double refine_shrink = 0.5;

    // Throws DomainError when n_theta or n_phi < 2, refine_iters < 0 or
    // refine_shrink outside (0, 1).
    void validate() const;

    static GridSpec one_side_default() { return {64, 64, 3, 0.5}; }
    static GridSpec two_side_default() { return {16, 16, 3, 0.5}; }
};

struct OptimizationResult {
    double value = 0.0;
    std::vector<QubitMeasurementBasis> argmin;  // one basis (qubit A) or two (A, B)
    GridSpec grid;
    long samples_evaluated = 0;
};

// Quantum mutual information S(A) + S(B) - S(AB).
double mutual_information(const DensityMatrix& m);

// sum_a p_a S(rho_{B|a}) for a projective measurement on qubit A.
// Outcomes with p_a < 1e-12 contribute nothing.
double conditional_entropy(const DensityMatrix& m, const QubitMeasurementBasis& basis_a);

// Joint outcome distribution p(a, b) for local measurements, index 2a + b.
std::array<double, 4> joint_distribution(const Mat4& m, const QubitMeasurementBasis& basis_a,
                                         const QubitMeasurementBasis& basis_b);

// H(p_A) + H(p_B) - H(p_AB) of the local measurement statistics.
double classical_mutual_information(const DensityMatrix& m, const QubitMeasurementBasis& basis_a,
                                    const QubitMeasurementBasis& basis_b);

OptimizationResult discord_one_side(const DensityMatrix& m, const GridSpec& grid = GridSpec::one_side_default());
OptimizationResult discord_two_side(const DensityMatrix& m, const GridSpec& grid = GridSpec::two_side_default());
OptimizationResult discord_relative_entropy(const DensityMatrix& m,
                                            const GridSpec& grid = GridSpec::two_side_default());

struct Theorem1Report {
    double lhs = 0.0;  // relative-entropy discord (Shannon entropy of the measured diagonal)
    double rhs = 0.0;  // min over the same bases of the relative entropy of coherence
    double gap = 0.0;
    std::optional<double> closed_form;  // Bell-diagonal inputs only
    std::optional<double> closed_form_gap;
    OptimizationResult lhs_result;
};

Theorem1Report verify_theorem1(const DensityMatrix& m, const GridSpec& grid = GridSpec::two_side_default());

struct Theorem2Report {
    double d2 = 0.0;
    double c_ab = 0.0;
    double c_a = 0.0;
    double c_b = 0.0;
    double gap = 0.0;  // |d2 - (c_ab - c_a - c_b)|
    OptimizationResult d2_result;
};

Theorem2Report verify_theorem2(const DensityMatrix& m, const GridSpec& grid = GridSpec::two_side_default());

}  // namespace bellcoh
