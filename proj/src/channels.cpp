#include "bellcoh/channels.hpp"

#include <cmath>
#include <sstream>

#include "bellcoh/error.hpp"

namespace bellcoh {
namespace {

void require_time(double t) {
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << "time must be nonnegative, got " << t;
        throw NegativeTime(os.str());
    }
}

void require_strength(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        std::ostringstream os;
        os << "noise strength " << q << " outside [0, 1]";
        throw DomainError(os.str());
    }
}

Mat2 kraus_pauli(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return pauli::x();
        case ChannelKind::BitPhaseFlip: return pauli::y();
        case ChannelKind::PhaseFlip: return pauli::z();
    }
    return pauli::z();
}

}  // namespace

PauliAxis channel_axis(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return PauliAxis::Axis1;
        case ChannelKind::BitPhaseFlip: return PauliAxis::Axis2;
        case ChannelKind::PhaseFlip: return PauliAxis::Axis3;
    }
    return PauliAxis::Axis3;
}

std::string channel_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return "bitflip";
        case ChannelKind::PhaseFlip: return "phaseflip";
        case ChannelKind::BitPhaseFlip: return "bitphaseflip";
    }
    return "phaseflip";
}

ChannelKind parse_channel(std::string_view name) {
    for (ChannelKind k : kAllChannels)
        if (name == channel_name(k)) return k;
    throw ParseError("unknown channel '" + std::string(name) + "' (expected bitflip, phaseflip or bitphaseflip)");
}

void ChannelSpec::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        std::ostringstream os;
        os << "damping rate must be positive, got " << gamma;
        throw DomainError(os.str());
    }
}

double noise_strength(double gamma, double t) {
    require_time(t);
    return -std::expm1(-gamma * t);
}

std::array<Mat2, 2> kraus_operators(ChannelKind kind, double q) {
    require_strength(q);
    return {Mat2::identity() * Complex{std::sqrt(1.0 - q / 2.0)}, kraus_pauli(kind) * Complex{std::sqrt(q / 2.0)}};
}

Mat4 apply_channel_one(const Mat4& m, ChannelKind kind, double q, Subsystem target) {
    const auto ks = kraus_operators(kind, q);
    Mat4 out;
    for (const Mat2& k : ks) {
        const Mat4 big = target == Subsystem::A ? kron(k, Mat2::identity()) : kron(Mat2::identity(), k);
        out += big * m * big.adjoint();
    }
    return out;
}

DensityMatrix apply_channel_both(const DensityMatrix& m, ChannelKind kind, double q) {
    const auto ks = kraus_operators(kind, q);
    Mat4 out;
    for (const Mat2& ki : ks) {
        for (const Mat2& kj : ks) {
            const Mat4 big = kron(ki, kj);
            out += big * m.matrix() * big.adjoint();
        }
    }
    return DensityMatrix(out);
}

BellDiagonalParams evolve_params(const BellDiagonalParams& p0, const ChannelSpec& spec, double t) {
    require_physical(p0);
    require_time(t);
    spec.validate();
    const double decay = std::exp(-2.0 * spec.gamma * t);
    const PauliAxis fixed = channel_axis(spec.kind);
    BellDiagonalParams p = p0;
    for (PauliAxis a : kAllAxes)
        if (a != fixed) p[a] = p0[a] * decay;
    return p;
}

}  // namespace bellcoh
