#pragma once

// Decoherence trajectories of Bell-diagonal states, transition times, and the
// frozen-coherence and role-switch diagnostics built on them.

#include <optional>
#include <string>
#include <vector>

#include "bellcoh/channels.hpp"
#include "bellcoh/measures.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh {

struct TrajectorySample {
    double t = 0.0;
    BellDiagonalParams params;
    MeasureSet measures;
    Region region;
};

struct Trajectory {
    ChannelSpec spec;
    BellDiagonalParams p0;
    std::vector<double> times;
    std::vector<TrajectorySample> samples;
};

// steps + 1 uniformly spaced samples over [0, t_max], evaluated from the
// closed-form evolution.
Trajectory sweep_trajectory(const BellDiagonalParams& p0, const ChannelSpec& spec, double t_max, int steps);

enum class TransitionStatus {
    Crossing,    // a damped |c_k| falls to the constant one at analytic_t
    NoCrossing,  // the constant axis already carries max |c_k|
    Infinite,    // the constant coefficient is 0: the crossing never happens
};

std::string to_string(TransitionStatus s);

struct TransitionReport {
    TransitionStatus status = TransitionStatus::NoCrossing;
    std::optional<double> analytic_t;
    std::optional<double> detected_t;
    PauliAxis constant_axis = PauliAxis::Axis3;
    PauliAxis crossing_axis = PauliAxis::Axis1;  // damped axis with the larger |c_k|

    // e.g. "|c1|=|c3|"
    std::string kind() const;
};

// t = ln(|c_m(0)| / |c_k(0)|) / (2 gamma), k the constant axis and m the
// dominant damped axis.
TransitionReport transition_time_analytic(const BellDiagonalParams& p0, const ChannelSpec& spec);

enum class TrackedMeasure {
    MutualInformation,
    ClassicalCorrelation,
    Discord,
    CoherenceRel1,
    CoherenceRel2,
    CoherenceRel3,
};

double tracked_value(const TrajectorySample& s, TrackedMeasure m);
std::vector<double> tracked_series(const Trajectory& traj, TrackedMeasure m);

inline constexpr double kKinkFactor = 10.0;
inline constexpr int kKinkWindow = 8;

// Locates slope discontinuities from second differences d2 normalized by
// step^2. A sample is flagged when |d2| exceeds 10x the smaller of the
// medians over the 8 samples on either side (neighbours at distance 1
// excluded), with a floor of 1e-12 / step^2 for rounding noise. Each run of
// flagged samples yields the midpoint of the grid interval whose two end
// samples carry the largest combined |d2|. Requires >= 5 samples.
std::vector<double> detect_sudden_change(const Trajectory& traj, TrackedMeasure measure);

// Analytic transition plus the detected classical-correlation kink closest
// to it (the first one when there is no analytic time).
TransitionReport transition_report(const Trajectory& traj);

inline constexpr double kFrozenSurfaceTolerance = 1e-12;

// c2 = -c1 c3 for bit flip and bit-phase flip; never for phase flip.
bool frozen_family_predicate(const BellDiagonalParams& p0, ChannelKind kind);

inline constexpr double kFrozenTolerance = 1e-9;

struct FrozenCheck {
    bool is_frozen = false;
    double max_deviation = 0.0;
    double initial_value = 0.0;
};

FrozenCheck empirical_frozen_check(const Trajectory& traj, TrackedMeasure measure = TrackedMeasure::CoherenceRel3);

enum class RoleBranch {
    Pre,   // CC = cc_kernel(C_l1), D = I - CC
    Post,  // D = C_r, CC = I - C_r
};

struct RoleRow {
    double t = 0.0;
    RoleBranch branch = RoleBranch::Post;
    bool at_transition = false;
    double residual_pre = 0.0;   // |CC - cc_kernel(C_l1)|
    double residual_post = 0.0;  // |D - C_r|

    double active_residual() const { return branch == RoleBranch::Pre ? residual_pre : residual_post; }
};

struct RoleTable {
    TransitionReport transition;  // status != Crossing means one branch covers every sample
    PauliAxis axis = PauliAxis::Axis3;  // constant axis of the channel; coherences are taken here
    std::vector<RoleRow> rows;
    double max_active_residual = 0.0;
};

RoleTable role_table(const Trajectory& traj);

}  // namespace bellcoh
