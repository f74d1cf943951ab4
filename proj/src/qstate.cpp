#include "bellcoh/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellcoh/eigensolver.hpp"
#include "bellcoh/error.hpp"

namespace bellcoh {

double BellDiagonalParams::max_abs() const {
    return std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
}

std::array<double, 4> bell_eigenvalues(const BellDiagonalParams& p) {
    std::array<double, 4> out{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double sa = a == 0 ? 1.0 : -1.0;
            const double sb = b == 0 ? 1.0 : -1.0;
            out[static_cast<std::size_t>(2 * a + b)] = (1.0 + sa * p.c1 - sa * sb * p.c2 + sb * p.c3) / 4.0;
        }
    }
    return out;
}

bool is_physical(const BellDiagonalParams& p) {
    const auto lam = bell_eigenvalues(p);
    return *std::min_element(lam.begin(), lam.end()) >= -kPhysicalTolerance;
}

void require_physical(const BellDiagonalParams& p) {
    if (!is_physical(p)) throw NonPhysicalState("state outside tetrahedron: " + to_string(p));
}

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
    const double herm = hermiticity_defect(m);
    if (herm > kHermitianTolerance) {
        std::ostringstream os;
        os << "density matrix not Hermitian (defect " << herm << ")";
        throw InvalidState(os.str());
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        std::ostringstream os;
        os << "density matrix trace " << tr.real() << " differs from 1";
        throw InvalidState(os.str());
    }
    const auto ev = hermitian_eigenvalues(m);
    const double lo = *std::min_element(ev.begin(), ev.end());
    if (lo < kEigenvalueFloor) {
        std::ostringstream os;
        os << "density matrix not positive semidefinite (eigenvalue " << lo << ")";
        throw InvalidState(os.str());
    }
}

Mat4 bell_matrix(const BellDiagonalParams& p, PauliAxis axis) {
    double diag = 0.0, corner = 0.0, middle = 0.0;
    switch (axis) {
        case PauliAxis::Axis3:
            diag = p.c3;
            corner = p.c1 - p.c2;
            middle = p.c1 + p.c2;
            break;
        case PauliAxis::Axis1:
            diag = p.c1;
            corner = p.c3 - p.c2;
            middle = p.c3 + p.c2;
            break;
        case PauliAxis::Axis2:
            diag = p.c2;
            corner = p.c3 - p.c1;
            middle = p.c1 + p.c3;
            break;
    }
    Mat4 m;
    m(0, 0) = m(3, 3) = (1.0 + diag) / 4.0;
    m(1, 1) = m(2, 2) = (1.0 - diag) / 4.0;
    m(0, 3) = m(3, 0) = corner / 4.0;
    m(1, 2) = m(2, 1) = middle / 4.0;
    return m;
}

DensityMatrix to_density_matrix(const BellDiagonalParams& p, PauliAxis axis) {
    require_physical(p);
    return DensityMatrix(bell_matrix(p, axis));
}

BellProjection from_density_matrix(const DensityMatrix& m) {
    const auto corr = [&](const Mat2& s) { return (m.matrix() * kron(s, s)).trace().real(); };
    BellProjection out;
    out.params = {corr(pauli::x()), corr(pauli::y()), corr(pauli::z())};
    out.residual = max_abs_diff(m.matrix(), bell_matrix(out.params, PauliAxis::Axis3));
    out.is_bell_diagonal = out.residual <= kBellDiagonalTolerance;
    return out;
}

BellDiagonalParams require_bell_diagonal(const DensityMatrix& m) {
    const auto proj = from_density_matrix(m);
    if (!proj.is_bell_diagonal) {
        std::ostringstream os;
        os << "matrix is not Bell-diagonal (residual " << proj.residual << ")";
        throw NotBellDiagonal(os.str(), proj.residual);
    }
    return proj.params;
}

Mat2 reduced_state(const Mat4& m, Subsystem keep) {
    Mat2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                s += keep == Subsystem::A ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

Mat2 reduced_state(const DensityMatrix& m, Subsystem keep) { return reduced_state(m.matrix(), keep); }

BellDiagonalParams random_physical_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        BellDiagonalParams p{u(rng), u(rng), u(rng)};
        if (is_physical(p)) return p;
    }
}

std::string to_string(const BellDiagonalParams& p) {
    std::ostringstream os;
    os << p.c1 << ',' << p.c2 << ',' << p.c3;
    return os.str();
}

}  // namespace bellcoh
