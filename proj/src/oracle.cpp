#include "bellcoh/oracle.hpp"

#include <cmath>
#include <numbers>

#include "bellcoh/entropy.hpp"
#include "bellcoh/error.hpp"

namespace bellcoh {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroProbability = 1e-12;

QubitMeasurementBasis basis_from(double theta, double phi) { return QubitMeasurementBasis{theta, phi}; }

// Evaluates `objective` over a (theta, phi)^Qubits grid in lexicographic
// order, then refines around the incumbent with windows shrinking by
// grid.refine_shrink. The first strictly smaller value wins ties.
template <std::size_t Qubits, class Objective>
OptimizationResult grid_minimize(Objective&& objective, const GridSpec& grid) {
    grid.validate();
    constexpr std::size_t kDims = 2 * Qubits;
    std::array<int, kDims> counts{};
    std::array<double, kDims> steps{};
    for (std::size_t q = 0; q < Qubits; ++q) {
        counts[2 * q] = grid.n_theta;
        counts[2 * q + 1] = grid.n_phi;
        steps[2 * q] = kPi / grid.n_theta;
        steps[2 * q + 1] = 2.0 * kPi / grid.n_phi;
    }

    std::array<double, kDims> best_angles{};
    double best = 0.0;
    bool have_best = false;
    long evaluated = 0;

    std::array<std::vector<double>, kDims> axes;
    for (int round = 0; round <= grid.refine_iters; ++round) {
        for (std::size_t d = 0; d < kDims; ++d) {
            auto& ax = axes[d];
            ax.resize(static_cast<std::size_t>(counts[d]));
            if (round == 0) {
                for (int i = 0; i < counts[d]; ++i) ax[static_cast<std::size_t>(i)] = steps[d] * i;
            } else {
                const double half = steps[d] * std::pow(grid.refine_shrink, round - 1);
                for (int i = 0; i < counts[d]; ++i)
                    ax[static_cast<std::size_t>(i)] =
                        best_angles[d] + half * (2.0 * i / (counts[d] - 1) - 1.0);
            }
        }
        std::array<int, kDims> idx{};
        std::array<double, kDims> angles{};
        bool more = true;
        while (more) {
            for (std::size_t d = 0; d < kDims; ++d) angles[d] = axes[d][static_cast<std::size_t>(idx[d])];
            const double v = objective(angles);
            ++evaluated;
            if (!have_best || v < best) {
                best = v;
                best_angles = angles;
                have_best = true;
            }
            // Odometer increment, last angle fastest.
            more = false;
            for (std::size_t d = kDims; d-- > 0;) {
                if (++idx[d] < counts[d]) {
                    more = true;
                    break;
                }
                idx[d] = 0;
            }
        }
    }

    OptimizationResult out;
    out.value = best;
    out.grid = grid;
    out.samples_evaluated = evaluated;
    for (std::size_t q = 0; q < Qubits; ++q)
        out.argmin.push_back(basis_from(best_angles[2 * q], best_angles[2 * q + 1]).normalized());
    return out;
}

double shannon_clamped(std::array<double, 4> p) {
    for (double& v : p)
        if (v < 0.0) v = 0.0;
    return shannon_entropy(p);
}

double binary_entropy_of(double p0, double p1) {
    const std::array<double, 2> p{std::max(p0, 0.0), std::max(p1, 0.0)};
    return shannon_entropy(p);
}

}  // namespace

Mat2 QubitMeasurementBasis::vectors() const {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex e = std::polar(1.0, phi);
    // Column 0: (c, e s); column 1: (s, -e c).
    return Mat2{c, s, e * s, -e * c};
}

std::array<Mat2, 2> QubitMeasurementBasis::projectors() const {
    const Mat2 v = vectors();
    std::array<Mat2, 2> out;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) out[k](i, j) = v(i, k) * std::conj(v(j, k));
    return out;
}

QubitMeasurementBasis QubitMeasurementBasis::normalized() const {
    double t = std::fmod(theta, 2.0 * kPi);
    double p = phi;
    if (t < 0.0) t += 2.0 * kPi;
    if (t > kPi) {
        t = 2.0 * kPi - t;
        p += kPi;
    }
    p = std::fmod(p, 2.0 * kPi);
    if (p < 0.0) p += 2.0 * kPi;
    return {t, p};
}

void GridSpec::validate() const {
    if (n_theta < 2 || n_phi < 2) throw DomainError("grid needs at least 2 points per angle");
    if (refine_iters < 0) throw DomainError("refine iterations must be nonnegative");
    if (!(refine_shrink > 0.0 && refine_shrink < 1.0)) throw DomainError("refine shrink must lie in (0, 1)");
}

double mutual_information(const DensityMatrix& m) {
    return von_neumann_entropy(reduced_state(m, Subsystem::A)) + von_neumann_entropy(reduced_state(m, Subsystem::B)) -
           von_neumann_entropy(m);
}

double conditional_entropy(const DensityMatrix& m, const QubitMeasurementBasis& basis_a) {
    const Mat2 v = basis_a.vectors();
    double total = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        // <psi_a|_A m |psi_a>_A
        Mat2 cond;
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l) {
                Complex s = 0.0;
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) s += std::conj(v(i, a)) * m(2 * i + k, 2 * j + l) * v(j, a);
                cond(k, l) = s;
            }
        const double p = cond.trace().real();
        if (p < kZeroProbability) continue;
        total += p * von_neumann_entropy(cond * Complex{1.0 / p});
    }
    return total;
}

std::array<double, 4> joint_distribution(const Mat4& m, const QubitMeasurementBasis& basis_a,
                                         const QubitMeasurementBasis& basis_b) {
    ProductBasis pb{basis_a.vectors(), basis_b.vectors()};
    const Mat4 u = pb.unitary();
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (u(i, k) == Complex{}) continue;
            Complex row = 0.0;
            for (std::size_t j = 0; j < 4; ++j) row += m(i, j) * u(j, k);
            s += std::conj(u(i, k)) * row;
        }
        p[k] = s.real();
    }
    return p;
}

double classical_mutual_information(const DensityMatrix& m, const QubitMeasurementBasis& basis_a,
                                    const QubitMeasurementBasis& basis_b) {
    const auto p = joint_distribution(m.matrix(), basis_a, basis_b);
    const double ha = binary_entropy_of(p[0] + p[1], p[2] + p[3]);
    const double hb = binary_entropy_of(p[0] + p[2], p[1] + p[3]);
    return ha + hb - shannon_clamped(p);
}

OptimizationResult discord_one_side(const DensityMatrix& m, const GridSpec& grid) {
    const double total = mutual_information(m);
    const double sb = von_neumann_entropy(reduced_state(m, Subsystem::B));
    return grid_minimize<1>(
        [&](const std::array<double, 2>& ang) {
            return total - (sb - conditional_entropy(m, basis_from(ang[0], ang[1])));
        },
        grid);
}

OptimizationResult discord_two_side(const DensityMatrix& m, const GridSpec& grid) {
    const double total = mutual_information(m);
    return grid_minimize<2>(
        [&](const std::array<double, 4>& ang) {
            return total - classical_mutual_information(m, basis_from(ang[0], ang[1]), basis_from(ang[2], ang[3]));
        },
        grid);
}

OptimizationResult discord_relative_entropy(const DensityMatrix& m, const GridSpec& grid) {
    const double s = von_neumann_entropy(m);
    return grid_minimize<2>(
        [&](const std::array<double, 4>& ang) {
            return shannon_clamped(joint_distribution(m.matrix(), basis_from(ang[0], ang[1]), basis_from(ang[2], ang[3]))) -
                   s;
        },
        grid);
}

Theorem1Report verify_theorem1(const DensityMatrix& m, const GridSpec& grid) {
    Theorem1Report r;
    r.lhs_result = discord_relative_entropy(m, grid);
    r.lhs = r.lhs_result.value;

    // Same bases, coherence route: dephase U^dagger m U and take its von
    // Neumann entropy.
    const double s = von_neumann_entropy(m);
    const auto rhs = grid_minimize<2>(
        [&](const std::array<double, 4>& ang) {
            const ProductBasis pb{basis_from(ang[0], ang[1]).vectors(), basis_from(ang[2], ang[3]).vectors()};
            const Mat4 u = pb.unitary();
            const Mat4 rotated = u.adjoint() * m.matrix() * u;
            return von_neumann_entropy(Mat4::diagonal(rotated.real_diagonal())) - s;
        },
        grid);
    r.rhs = rhs.value;
    r.gap = std::abs(r.lhs - r.rhs);

    const auto proj = from_density_matrix(m);
    if (proj.is_bell_diagonal && is_physical(proj.params)) {
        r.closed_form = quantum_discord(proj.params);
        r.closed_form_gap = std::abs(r.lhs - *r.closed_form);
    }
    return r;
}

Theorem2Report verify_theorem2(const DensityMatrix& m, const GridSpec& grid) {
    Theorem2Report r;
    r.d2_result = discord_two_side(m, grid);
    r.d2 = r.d2_result.value;
    const Mat2 va = r.d2_result.argmin[0].vectors();
    const Mat2 vb = r.d2_result.argmin[1].vectors();
    r.c_ab = coherence_rel_matrix(m, ProductBasis{va, vb});
    r.c_a = coherence_rel_qubit(reduced_state(m, Subsystem::A), va);
    r.c_b = coherence_rel_qubit(reduced_state(m, Subsystem::B), vb);
    r.gap = std::abs(r.d2 - (r.c_ab - r.c_a - r.c_b));
    return r;
}

}  // namespace bellcoh
