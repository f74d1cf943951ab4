#include "bellcoh/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellcoh/entropy.hpp"
#include "bellcoh/error.hpp"

namespace bellcoh {
namespace {

double median(std::vector<double> v) {
    const std::size_t n = v.size();
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2), v.end());
    const double hi = v[n / 2];
    if (n % 2 == 1) return hi;
    const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2));
    return 0.5 * (lo + hi);
}

}  // namespace

Trajectory sweep_trajectory(const BellDiagonalParams& p0, const ChannelSpec& spec, double t_max, int steps) {
    require_physical(p0);
    spec.validate();
    if (steps < 2) throw DomainError("steps must be at least 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");

    Trajectory traj;
    traj.spec = spec;
    traj.p0 = p0;
    traj.times.reserve(static_cast<std::size_t>(steps) + 1);
    traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const double t = i == steps ? t_max : t_max * i / steps;
        TrajectorySample s;
        s.t = t;
        s.params = evolve_params(p0, spec, t);
        s.measures = measure_all(s.params);
        s.region = classify_region(s.params);
        traj.times.push_back(t);
        traj.samples.push_back(s);
    }
    return traj;
}

std::string to_string(TransitionStatus s) {
    switch (s) {
        case TransitionStatus::Crossing: return "crossing";
        case TransitionStatus::NoCrossing: return "none";
        case TransitionStatus::Infinite: return "infinite";
    }
    return "none";
}

std::string TransitionReport::kind() const {
    return "|c" + std::to_string(axis_number(crossing_axis)) + "|=|c" + std::to_string(axis_number(constant_axis)) + "|";
}

TransitionReport transition_time_analytic(const BellDiagonalParams& p0, const ChannelSpec& spec) {
    require_physical(p0);
    spec.validate();
    TransitionReport r;
    r.constant_axis = channel_axis(spec.kind);
    bool first = true;
    for (PauliAxis a : kAllAxes) {
        if (a == r.constant_axis) continue;
        if (first || std::abs(p0[a]) > std::abs(p0[r.crossing_axis])) r.crossing_axis = a;
        first = false;
    }
    const double fixed = std::abs(p0[r.constant_axis]);
    const double damped = std::abs(p0[r.crossing_axis]);
    if (damped <= fixed) {
        r.status = TransitionStatus::NoCrossing;
    } else if (fixed == 0.0) {
        r.status = TransitionStatus::Infinite;
    } else {
        r.status = TransitionStatus::Crossing;
        r.analytic_t = std::log(damped / fixed) / (2.0 * spec.gamma);
    }
    return r;
}

double tracked_value(const TrajectorySample& s, TrackedMeasure m) {
    switch (m) {
        case TrackedMeasure::MutualInformation: return s.measures.mutual_information;
        case TrackedMeasure::ClassicalCorrelation: return s.measures.classical_correlation;
        case TrackedMeasure::Discord: return s.measures.discord;
        case TrackedMeasure::CoherenceRel1: return s.measures.coherence_rel[0];
        case TrackedMeasure::CoherenceRel2: return s.measures.coherence_rel[1];
        case TrackedMeasure::CoherenceRel3: return s.measures.coherence_rel[2];
    }
    return 0.0;
}

std::vector<double> tracked_series(const Trajectory& traj, TrackedMeasure m) {
    std::vector<double> out;
    out.reserve(traj.samples.size());
    for (const auto& s : traj.samples) out.push_back(tracked_value(s, m));
    return out;
}

std::vector<double> detect_sudden_change(const Trajectory& traj, TrackedMeasure measure) {
    const std::size_t n = traj.samples.size();
    if (n < 5) throw DomainError("sudden-change detection needs at least 5 samples");
    const auto f = tracked_series(traj, measure);
    const auto& t = traj.times;
    const double h = t[1] - t[0];

    // d2[i] belongs to sample i; endpoints stay 0 and are never flagged.
    std::vector<double> d2(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) d2[i] = std::abs(f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);

    const double floor = 1e-12 / (h * h);
    const std::ptrdiff_t first = 1;
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(n) - 2;
    std::vector<bool> flagged(n, false);
    for (std::ptrdiff_t i = first; i <= last; ++i) {
        std::vector<double> left, right;
        for (std::ptrdiff_t j = std::max(first, i - kKinkWindow); j <= i - 2; ++j) left.push_back(d2[static_cast<std::size_t>(j)]);
        for (std::ptrdiff_t j = i + 2; j <= std::min(last, i + kKinkWindow); ++j) right.push_back(d2[static_cast<std::size_t>(j)]);
        double baseline = -1.0;
        for (const auto* side : {&left, &right}) {
            if (side->empty()) continue;
            const double med = median(*side);
            if (baseline < 0.0 || med < baseline) baseline = med;
        }
        const double threshold = std::max(kKinkFactor * std::max(baseline, 0.0), floor);
        flagged[static_cast<std::size_t>(i)] = d2[static_cast<std::size_t>(i)] > threshold;
    }

    std::vector<double> out;
    std::ptrdiff_t i = first;
    while (i <= last) {
        if (!flagged[static_cast<std::size_t>(i)]) {
            ++i;
            continue;
        }
        std::ptrdiff_t j = i;
        while (j + 1 <= last && flagged[static_cast<std::size_t>(j + 1)]) ++j;
        // Interval [a, a+1] with the largest |d2[a]| + |d2[a+1]|.
        std::ptrdiff_t best_a = i;
        double best_sum = -1.0;
        for (std::ptrdiff_t a = std::max<std::ptrdiff_t>(0, i - 1); a <= std::min<std::ptrdiff_t>(j, static_cast<std::ptrdiff_t>(n) - 2); ++a) {
            const double s = d2[static_cast<std::size_t>(a)] + d2[static_cast<std::size_t>(a + 1)];
            if (s > best_sum) {
                best_sum = s;
                best_a = a;
            }
        }
        out.push_back(0.5 * (t[static_cast<std::size_t>(best_a)] + t[static_cast<std::size_t>(best_a + 1)]));
        i = j + 1;
    }
    return out;
}

TransitionReport transition_report(const Trajectory& traj) {
    TransitionReport r = transition_time_analytic(traj.p0, traj.spec);
    const auto kinks = detect_sudden_change(traj, TrackedMeasure::ClassicalCorrelation);
    if (kinks.empty()) return r;
    if (!r.analytic_t) {
        r.detected_t = kinks.front();
        return r;
    }
    const double target = *r.analytic_t;
    r.detected_t = *std::min_element(kinks.begin(), kinks.end(), [&](double a, double b) {
        return std::abs(a - target) < std::abs(b - target);
    });
    return r;
}

bool frozen_family_predicate(const BellDiagonalParams& p0, ChannelKind kind) {
    require_physical(p0);
    if (kind == ChannelKind::PhaseFlip) return false;
    return std::abs(p0.c2 + p0.c1 * p0.c3) <= kFrozenSurfaceTolerance;
}

FrozenCheck empirical_frozen_check(const Trajectory& traj, TrackedMeasure measure) {
    FrozenCheck out;
    if (traj.samples.empty()) {
        out.is_frozen = true;
        return out;
    }
    const auto f = tracked_series(traj, measure);
    out.initial_value = f.front();
    for (double v : f) out.max_deviation = std::max(out.max_deviation, std::abs(v - f.front()));
    out.is_frozen = out.max_deviation <= kFrozenTolerance;
    return out;
}

RoleTable role_table(const Trajectory& traj) {
    RoleTable table;
    table.transition = transition_time_analytic(traj.p0, traj.spec);
    table.axis = table.transition.constant_axis;
    const std::size_t k = axis_index(table.axis);
    for (const auto& s : traj.samples) {
        RoleRow row;
        row.t = s.t;
        row.residual_pre = std::abs(s.measures.classical_correlation - cc_kernel(std::min(s.measures.coherence_l1[k], 1.0)));
        row.residual_post = std::abs(s.measures.discord - s.measures.coherence_rel[k]);
        switch (table.transition.status) {
            case TransitionStatus::NoCrossing: row.branch = RoleBranch::Post; break;
            case TransitionStatus::Infinite: row.branch = RoleBranch::Pre; break;
            case TransitionStatus::Crossing: {
                const double tbar = *table.transition.analytic_t;
                row.at_transition = std::abs(s.t - tbar) <= 1e-12 * std::max(1.0, tbar);
                row.branch = (s.t < tbar && !row.at_transition) ? RoleBranch::Pre : RoleBranch::Post;
                break;
            }
        }
        const double active = row.at_transition ? std::max(row.residual_pre, row.residual_post) : row.active_residual();
        table.max_active_residual = std::max(table.max_active_residual, active);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace bellcoh
