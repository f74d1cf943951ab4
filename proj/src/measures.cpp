#include "bellcoh/measures.hpp"

#include <algorithm>
#include <cmath>

#include "bellcoh/entropy.hpp"
#include "bellcoh/error.hpp"

namespace bellcoh {
namespace {

constexpr double kOrthonormalTolerance = 1e-10;

double clamp_nonnegative(double v) { return v < 0.0 && v > -1e-12 ? 0.0 : v; }

double bell_entropy(const BellDiagonalParams& p) {
    const auto lam = bell_eigenvalues(p);
    return shannon_entropy(lam);
}

template <std::size_t N>
void require_orthonormal(const SquareMatrix<N>& u) {
    if (max_abs_diff(u.adjoint() * u, SquareMatrix<N>::identity()) > kOrthonormalTolerance)
        throw InvalidBasis("measurement basis is not orthonormal");
}

}  // namespace

double dephased_entropy(double c) {
    return -2.0 * (xlog2x((1.0 + c) / 4.0) + xlog2x((1.0 - c) / 4.0));
}

double mutual_information(const BellDiagonalParams& p) {
    require_physical(p);
    return clamp_nonnegative(2.0 - bell_entropy(p));
}

double classical_correlation(const BellDiagonalParams& p) {
    require_physical(p);
    return cc_kernel(std::min(p.max_abs(), 1.0));
}

double quantum_discord(const BellDiagonalParams& p) {
    require_physical(p);
    return clamp_nonnegative(dephased_entropy(p.max_abs()) - bell_entropy(p));
}

double coherence_rel(const BellDiagonalParams& p, PauliAxis axis) {
    require_physical(p);
    return clamp_nonnegative(dephased_entropy(p[axis]) - bell_entropy(p));
}

double coherence_l1(const BellDiagonalParams& p, PauliAxis axis) {
    require_physical(p);
    double corner = 0.0, middle = 0.0;
    switch (axis) {
        case PauliAxis::Axis3: corner = p.c1 - p.c2; middle = p.c1 + p.c2; break;
        case PauliAxis::Axis1: corner = p.c3 - p.c2; middle = p.c3 + p.c2; break;
        case PauliAxis::Axis2: corner = p.c3 - p.c1; middle = p.c1 + p.c3; break;
    }
    return 0.5 * std::abs(corner) + 0.5 * std::abs(middle);
}

MeasureSet measure_all(const BellDiagonalParams& p) {
    require_physical(p);
    MeasureSet m;
    m.mutual_information = mutual_information(p);
    m.classical_correlation = classical_correlation(p);
    m.discord = quantum_discord(p);
    for (PauliAxis a : kAllAxes) {
        m.coherence_rel[axis_index(a)] = coherence_rel(p, a);
        m.coherence_l1[axis_index(a)] = coherence_l1(p, a);
    }
    return m;
}

ProductBasis computational_basis() { return {}; }

ProductBasis pauli_basis(PauliAxis axis) {
    const double r = 1.0 / std::sqrt(2.0);
    Mat2 u;
    switch (axis) {
        case PauliAxis::Axis1: u = Mat2{r, r, r, -r}; break;
        case PauliAxis::Axis2: u = Mat2{r, r, Complex{0.0, r}, Complex{0.0, -r}}; break;
        case PauliAxis::Axis3: u = Mat2::identity(); break;
    }
    return {u, u};
}

std::array<double, 4> diagonal_in_basis(const Mat4& m, const ProductBasis& basis) {
    const Mat4 u = basis.unitary();
    return (u.adjoint() * m * u).real_diagonal();
}

double coherence_rel_matrix(const DensityMatrix& m, const ProductBasis& basis) {
    require_orthonormal(basis.a);
    require_orthonormal(basis.b);
    const auto diag = diagonal_in_basis(m.matrix(), basis);
    return clamp_nonnegative(shannon_entropy(diag) - von_neumann_entropy(m));
}

double coherence_rel_qubit(const Mat2& rho, const Mat2& basis) {
    require_orthonormal(basis);
    const auto diag = (basis.adjoint() * rho * basis).real_diagonal();
    return clamp_nonnegative(shannon_entropy(diag) - von_neumann_entropy(rho));
}

double coherence_l1_matrix(const DensityMatrix& m) {
    double s = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r != c) s += std::abs(m(r, c));
    return s;
}

PauliAxis optimal_axis(const BellDiagonalParams& p) {
    require_physical(p);
    PauliAxis best = PauliAxis::Axis1;
    for (PauliAxis a : kAllAxes)
        if (std::abs(p[a]) > std::abs(p[best])) best = a;
    return best;
}

std::string Region::label() const {
    if (boundary) return "BOUNDARY";
    return "C" + std::to_string(axis_number(axis));
}

Region classify_region(const BellDiagonalParams& p) {
    Region r;
    r.axis = optimal_axis(p);
    std::array<double, 3> mags{std::abs(p.c1), std::abs(p.c2), std::abs(p.c3)};
    std::sort(mags.begin(), mags.end());
    r.boundary = mags[2] - mags[1] < kRegionBoundaryTolerance;
    return r;
}

}  // namespace bellcoh
