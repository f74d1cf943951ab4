#include "bellcoh/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellcoh/error.hpp"

namespace bellcoh {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double shannon_entropy(std::span<const double> p) {
    double sum = 0.0;
    double h = 0.0;
    for (double v : p) {
        if (v < -kNegativeProbabilityTolerance) {
            std::ostringstream os;
            os << "negative probability " << v;
            throw InvalidDistribution(os.str());
        }
        sum += v;
        h -= xlog2x(v);
    }
    if (std::abs(sum - 1.0) > kDistributionSumTolerance) {
        std::ostringstream os;
        os << "probabilities sum to " << sum;
        throw InvalidDistribution(os.str());
    }
    return h;
}

template <std::size_t N>
std::array<double, N> spectrum(const SquareMatrix<N>& m) {
    if (hermiticity_defect(m) > 1e-10) throw InvalidState("operator is not Hermitian");
    if (std::abs(m.trace() - 1.0) > kDistributionSumTolerance) throw InvalidState("operator trace differs from 1");
    auto ev = hermitian_eigenvalues(m);
    for (double& v : ev) {
        if (v < -kNegativeEigenvalueTolerance) {
            std::ostringstream os;
            os << "negative eigenvalue " << v;
            throw InvalidState(os.str());
        }
        if (v < 0.0) v = 0.0;
    }
    return ev;
}

template <std::size_t N>
double von_neumann_entropy(const SquareMatrix<N>& m) {
    const auto ev = spectrum(m);
    return shannon_entropy(ev);
}

double von_neumann_entropy(const DensityMatrix& m) { return von_neumann_entropy(m.matrix()); }

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& delta) {
    const auto dec = hermitian_eigen(delta.matrix());
    double cross = 0.0;  // Tr(rho log2 delta)
    for (std::size_t k = 0; k < 4; ++k) {
        double weight = 0.0;  // <v_k| rho |v_k>
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                weight += (std::conj(dec.vectors(i, k)) * rho(i, j) * dec.vectors(j, k)).real();
        if (dec.values[k] <= kSupportThreshold) {
            if (weight > kSupportThreshold) throw InfiniteDivergence("support of rho not contained in support of delta");
            continue;
        }
        cross += weight * std::log2(dec.values[k]);
    }
    const double d = -von_neumann_entropy(rho) - cross;
    return d < 0.0 && d > -1e-12 ? 0.0 : d;
}

double cc_kernel(double c) {
    if (c < -1e-12 || c > 1.0 + 1e-12) {
        std::ostringstream os;
        os << "cc_kernel argument " << c << " outside [0, 1]";
        throw DomainError(os.str());
    }
    c = std::clamp(c, 0.0, 1.0);
    return 0.5 * xlog2x(1.0 - c) + 0.5 * xlog2x(1.0 + c);
}

template std::array<double, 2> spectrum<2>(const Mat2&);
template std::array<double, 4> spectrum<4>(const Mat4&);
template double von_neumann_entropy<2>(const Mat2&);
template double von_neumann_entropy<4>(const Mat4&);

}  // namespace bellcoh
