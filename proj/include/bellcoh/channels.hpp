#pragma once

// Incoherent single-qubit Pauli channels applied to both qubits.

#include <array>
#include <string>
#include <string_view>

#include "bellcoh/linalg.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh {

enum class ChannelKind { BitFlip, PhaseFlip, BitPhaseFlip };

inline constexpr std::array<ChannelKind, 3> kAllChannels{ChannelKind::BitFlip, ChannelKind::PhaseFlip,
                                                         ChannelKind::BitPhaseFlip};

// Pauli axis of the Kraus operator; the correlation coefficient on this axis
// is left unchanged by the channel.
PauliAxis channel_axis(ChannelKind kind);

// "bitflip", "phaseflip", "bitphaseflip"
std::string channel_name(ChannelKind kind);

// Exact lowercase names only; throws ParseError otherwise.
ChannelKind parse_channel(std::string_view name);

struct ChannelSpec {
    ChannelKind kind = ChannelKind::PhaseFlip;
    double gamma = 0.1;  // damping rate, 1/time

    // Throws DomainError unless gamma > 0 and finite.
    void validate() const;
};

// q(t) = 1 - exp(-gamma t). With this strength, the two-qubit channel damps
// the transverse coefficients by (1 - q)^2 = exp(-2 gamma t).
double noise_strength(double gamma, double t);

// K0 = sqrt(1 - q/2) I, K1 = sqrt(q/2) sigma_kind.
std::array<Mat2, 2> kraus_operators(ChannelKind kind, double q);

// Channel on one qubit only.
Mat4 apply_channel_one(const Mat4& m, ChannelKind kind, double q, Subsystem target);

// sum_ij (K_i (x) K_j) m (K_i (x) K_j)^dagger
DensityMatrix apply_channel_both(const DensityMatrix& m, ChannelKind kind, double q);

// Closed-form evolution: the coefficient on channel_axis(kind) is constant,
// the other two decay as exp(-2 gamma t).
BellDiagonalParams evolve_params(const BellDiagonalParams& p0, const ChannelSpec& spec, double t);

}  // namespace bellcoh
