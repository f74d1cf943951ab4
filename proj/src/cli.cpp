#include "bellcoh/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellcoh/channels.hpp"
#include "bellcoh/dynamics.hpp"
#include "bellcoh/error.hpp"
#include "bellcoh/io.hpp"
#include "bellcoh/measures.hpp"
#include "bellcoh/oracle.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string state;
    std::string matrix;
    std::string channel;
    double gamma = 0.1;
    double t_max = 30.0;
    int steps = 300;
    std::optional<int> grid_theta;
    std::optional<int> grid_phi;
    std::optional<int> refine;
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 42;
    bool self_check = false;
    std::optional<int> axis;
    std::string figure;
};

// Figure parameters reproduced by `reproduce`.
constexpr BellDiagonalParams kFig3State{0.6, -0.6, 1.0};
constexpr BellDiagonalParams kFig4State{1.0, -0.6, 0.6};
constexpr double kFigureGamma = 0.1;
constexpr double kFigureTMax = 30.0;
constexpr int kFigureSteps = 300;
constexpr int kTable1States = 1000;
constexpr double kTable1Tolerance = 1e-12;
constexpr double kTable2Tolerance = 1e-10;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        out.flush();
        if (!out) throw IoFailure("failed writing to standard output");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoFailure("failed writing '" + path + "'");
}

BellDiagonalParams physical_state(const std::string& literal) {
    const auto p = parse_state_literal(literal);
    require_physical(p);
    return p;
}

ChannelSpec channel_spec(const RunConfig& cfg) {
    ChannelSpec spec{parse_channel(cfg.channel), cfg.gamma};
    spec.validate();
    return spec;
}

void validate_sweep(const RunConfig& cfg) {
    if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) throw DomainError("--t-max must be positive");
    if (cfg.steps < 2) throw DomainError("--steps must be at least 2");
}

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

ojson opt_json(const std::optional<double>& v) { return v ? ojson(round_to_output(*v)) : ojson(nullptr); }

void self_check_csv(const std::string& csv) {
    const int bad = count_additivity_violations(csv);
    if (bad != 0) throw SelfCheckFailure("self-check failed: " + std::to_string(bad) + " rows violate I = CC + D");
}

// --- measure -------------------------------------------------------------

void cmd_measure(const RunConfig& cfg, std::ostream& out) {
    const auto p = physical_state(cfg.state);
    if (cfg.axis && (*cfg.axis < 1 || *cfg.axis > 3)) throw DomainError("--axis must be 1, 2 or 3");
    const auto m = measure_all(p);
    const auto region = classify_region(p);

    std::vector<std::pair<std::string, double>> fields{
        {"c1", p.c1},
        {"c2", p.c2},
        {"c3", p.c3},
        {"mutual_info", m.mutual_information},
        {"classical_corr", m.classical_correlation},
        {"discord", m.discord},
    };
    for (PauliAxis a : kAllAxes)
        fields.emplace_back("coherence_rel_" + std::to_string(axis_number(a)), m.coherence_rel[axis_index(a)]);
    for (PauliAxis a : kAllAxes)
        fields.emplace_back("coherence_l1_" + std::to_string(axis_number(a)), m.coherence_l1[axis_index(a)]);

    std::optional<PauliAxis> chosen;
    if (cfg.axis) chosen = static_cast<PauliAxis>(*cfg.axis);

    if (cfg.format == "json") {
        ojson o;
        for (const auto& [k, v] : fields) o[k] = round_to_output(v);
        o["optimal_axis"] = axis_number(region.axis);
        o["region"] = region.label();
        if (chosen) {
            o["axis"] = axis_number(*chosen);
            o["coherence_rel"] = round_to_output(m.coherence_rel[axis_index(*chosen)]);
            o["coherence_l1"] = round_to_output(m.coherence_l1[axis_index(*chosen)]);
        }
        emit(o.dump(2) + "\n", cfg.output, out);
        return;
    }
    std::string header, row;
    for (const auto& [k, v] : fields) {
        header += k + ",";
        row += format_number(v) + ",";
    }
    header += "optimal_axis,region";
    row += std::to_string(axis_number(region.axis)) + "," + region.label();
    if (chosen) {
        header += ",axis,coherence_rel,coherence_l1";
        row += "," + std::to_string(axis_number(*chosen)) + "," +
               format_number(m.coherence_rel[axis_index(*chosen)]) + "," +
               format_number(m.coherence_l1[axis_index(*chosen)]);
    }
    emit(header + "\n" + row + "\n", cfg.output, out);
}

// --- evolve --------------------------------------------------------------

void cmd_evolve(const RunConfig& cfg, std::ostream& out) {
    const auto p = physical_state(cfg.state);
    const auto spec = channel_spec(cfg);
    validate_sweep(cfg);
    const auto traj = sweep_trajectory(p, spec, cfg.t_max, cfg.steps);
    const std::string csv = trajectory_csv(traj);
    if (cfg.self_check) self_check_csv(csv);
    emit(cfg.format == "json" ? trajectory_json(traj) : csv, cfg.output, out);
}

// --- transition ----------------------------------------------------------

std::string transition_reason(TransitionStatus s) {
    switch (s) {
        case TransitionStatus::Crossing: return "damped coefficient falls to the constant one";
        case TransitionStatus::NoCrossing: return "constant axis already maximal";
        case TransitionStatus::Infinite: return "constant coefficient is zero";
    }
    return {};
}

void cmd_transition(const RunConfig& cfg, std::ostream& out) {
    const auto p = physical_state(cfg.state);
    const auto spec = channel_spec(cfg);
    if (cfg.steps < 5) throw DomainError("--steps must be at least 5 for kink detection");
    const auto analytic = transition_time_analytic(p, spec);
    const double t_max = analytic.analytic_t && *analytic.analytic_t > 0.0 ? 4.0 * *analytic.analytic_t
                                                                            : 3.0 / spec.gamma;
    const auto traj = sweep_trajectory(p, spec, t_max, cfg.steps);
    const auto rep = transition_report(traj);
    const double step = t_max / cfg.steps;

    std::string analytic_text = rep.analytic_t ? format_number(*rep.analytic_t) : to_string(rep.status);
    std::string detected_text = rep.detected_t ? format_number(*rep.detected_t) : "none";

    if (cfg.format == "json") {
        ojson o;
        o["status"] = to_string(rep.status);
        o["kind"] = rep.kind();
        o["analytic_t"] = rep.analytic_t ? ojson(round_to_output(*rep.analytic_t)) : ojson(to_string(rep.status));
        o["detected_t"] = opt_json(rep.detected_t);
        o["t_max"] = round_to_output(t_max);
        o["step"] = round_to_output(step);
        o["reason"] = transition_reason(rep.status);
        emit(o.dump(2) + "\n", cfg.output, out);
        return;
    }
    std::ostringstream os;
    os << "status,kind,analytic_t,detected_t,t_max,step,reason\n"
       << to_string(rep.status) << ',' << rep.kind() << ',' << analytic_text << ',' << detected_text << ','
       << format_number(t_max) << ',' << format_number(step) << ',' << transition_reason(rep.status) << '\n';
    emit(os.str(), cfg.output, out);
}

// --- oracle-discord / verify-theorems ------------------------------------

struct OracleInput {
    DensityMatrix matrix;
    std::optional<BellDiagonalParams> bell;
};

OracleInput oracle_input(const RunConfig& cfg) {
    if (cfg.state.empty() == cfg.matrix.empty()) throw DomainError("give exactly one of --state or --matrix");
    if (!cfg.state.empty()) {
        const auto p = physical_state(cfg.state);
        return {to_density_matrix(p, PauliAxis::Axis3), p};
    }
    const auto m = load_density_matrix(cfg.matrix);
    const auto proj = from_density_matrix(m);
    std::optional<BellDiagonalParams> bell;
    if (proj.is_bell_diagonal && is_physical(proj.params)) bell = proj.params;
    return {m, bell};
}

GridSpec grid_for(const RunConfig& cfg, GridSpec base) {
    if (cfg.grid_theta) base.n_theta = *cfg.grid_theta;
    if (cfg.grid_phi) base.n_phi = *cfg.grid_phi;
    if (cfg.refine) base.refine_iters = *cfg.refine;
    base.validate();
    return base;
}

void cmd_oracle_discord(const RunConfig& cfg, std::ostream& out) {
    const auto in = oracle_input(cfg);
    const auto one_grid = grid_for(cfg, GridSpec::one_side_default());
    const auto two_grid = grid_for(cfg, GridSpec::two_side_default());

    struct Row {
        std::string method;
        OptimizationResult res;
    };
    const std::vector<Row> rows{
        {"one_side", discord_one_side(in.matrix, one_grid)},
        {"two_side", discord_two_side(in.matrix, two_grid)},
        {"relative_entropy", discord_relative_entropy(in.matrix, two_grid)},
    };
    std::optional<double> closed;
    if (in.bell) closed = quantum_discord(*in.bell);

    if (cfg.format == "json") {
        ojson arr = ojson::array();
        for (const auto& r : rows) {
            ojson o;
            o["method"] = r.method;
            o["value"] = round_to_output(r.res.value);
            o["theta_a"] = round_to_output(r.res.argmin[0].theta);
            o["phi_a"] = round_to_output(r.res.argmin[0].phi);
            o["theta_b"] = r.res.argmin.size() > 1 ? ojson(round_to_output(r.res.argmin[1].theta)) : ojson(nullptr);
            o["phi_b"] = r.res.argmin.size() > 1 ? ojson(round_to_output(r.res.argmin[1].phi)) : ojson(nullptr);
            o["closed_form"] = opt_json(closed);
            o["gap"] = closed ? ojson(round_to_output(std::abs(r.res.value - *closed))) : ojson(nullptr);
            o["samples"] = r.res.samples_evaluated;
            arr.push_back(std::move(o));
        }
        emit(arr.dump(2) + "\n", cfg.output, out);
        return;
    }
    std::string text = "method,value,theta_a,phi_a,theta_b,phi_b,closed_form,gap,samples\n";
    for (const auto& r : rows) {
        text += r.method + "," + format_number(r.res.value) + "," + format_number(r.res.argmin[0].theta) + "," +
                format_number(r.res.argmin[0].phi) + ",";
        if (r.res.argmin.size() > 1)
            text += format_number(r.res.argmin[1].theta) + "," + format_number(r.res.argmin[1].phi);
        else
            text += ",";
        text += "," + opt_number(closed) + ",";
        if (closed) text += format_number(std::abs(r.res.value - *closed));
        text += "," + std::to_string(r.res.samples_evaluated) + "\n";
    }
    emit(text, cfg.output, out);
}

void cmd_verify_theorems(const RunConfig& cfg, std::ostream& out) {
    const auto in = oracle_input(cfg);
    const auto grid = grid_for(cfg, GridSpec::two_side_default());
    const auto t1 = verify_theorem1(in.matrix, grid);
    const auto t2 = verify_theorem2(in.matrix, grid);

    const std::vector<std::pair<std::string, std::optional<double>>> fields{
        {"theorem1_lhs", t1.lhs},
        {"theorem1_rhs", t1.rhs},
        {"theorem1_gap", t1.gap},
        {"theorem1_closed_form", t1.closed_form},
        {"theorem1_closed_form_gap", t1.closed_form_gap},
        {"theorem2_d2", t2.d2},
        {"theorem2_c_ab", t2.c_ab},
        {"theorem2_c_a", t2.c_a},
        {"theorem2_c_b", t2.c_b},
        {"theorem2_gap", t2.gap},
    };
    if (cfg.format == "json") {
        ojson o;
        for (const auto& [k, v] : fields) o[k] = opt_json(v);
        emit(o.dump(2) + "\n", cfg.output, out);
        return;
    }
    std::string text = "quantity,value\n";
    for (const auto& [k, v] : fields) text += k + "," + (v ? format_number(*v) : "none") + "\n";
    emit(text, cfg.output, out);
}

// --- reproduce -----------------------------------------------------------

std::string output_path(const RunConfig& cfg, const std::string& name) {
    const std::filesystem::path dir = cfg.output.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.output);
    return (dir / name).string();
}

void reproduce_figure(const RunConfig& cfg, const std::string& name, const BellDiagonalParams& p, ChannelKind kind,
                      std::ostream& out) {
    const auto traj = sweep_trajectory(p, ChannelSpec{kind, kFigureGamma}, kFigureTMax, kFigureSteps);
    const std::string csv = trajectory_csv(traj);
    if (cfg.self_check) self_check_csv(csv);
    const std::string path = output_path(cfg, name + ".csv");
    emit(csv, path, out);
    out << name << ": wrote " << path << " (" << traj.samples.size() << " rows)\n";
}

void reproduce_table1(const RunConfig& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    std::string csv = "index,c1,c2,c3,discord,coherence_rel_optimal,optimal_axis,region,residual\n";
    int violations = 0;
    for (int i = 0; i < kTable1States; ++i) {
        const auto p = random_physical_params(rng);
        const auto axis = optimal_axis(p);
        const double d = quantum_discord(p);
        const double c = coherence_rel(p, axis);
        const double residual = std::abs(d - c);
        if (residual > kTable1Tolerance) ++violations;
        csv += std::to_string(i) + "," + format_number(p.c1) + "," + format_number(p.c2) + "," + format_number(p.c3) +
               "," + format_number(d) + "," + format_number(c) + "," + std::to_string(axis_number(axis)) + "," +
               classify_region(p).label() + "," + format_number(residual) + "\n";
    }
    const std::string path = output_path(cfg, "table1.csv");
    emit(csv, path, out);
    out << "table1: wrote " << path << " (" << kTable1States << " states, " << violations
        << " violations of D = C_r at the optimal axis)\n";
}

void reproduce_table2(const RunConfig& cfg, std::ostream& out) {
    const auto traj =
        sweep_trajectory(kFig4State, ChannelSpec{ChannelKind::PhaseFlip, kFigureGamma}, kFigureTMax, kFigureSteps);
    const auto table = role_table(traj);
    std::string csv = "t,branch,residual_pre,residual_post,active_residual\n";
    int violations = 0;
    for (const auto& row : table.rows) {
        const double active = row.at_transition ? std::max(row.residual_pre, row.residual_post) : row.active_residual();
        if (active > kTable2Tolerance) ++violations;
        csv += format_number(row.t) + "," + (row.branch == RoleBranch::Pre ? "pre" : "post") + "," +
               format_number(row.residual_pre) + "," + format_number(row.residual_post) + "," + format_number(active) +
               "\n";
    }
    const std::string path = output_path(cfg, "table2.csv");
    emit(csv, path, out);
    out << "table2: wrote " << path << " (transition at " << opt_number(table.transition.analytic_t) << ", "
        << violations << " rows with active residual above 1e-10)\n";
}

void cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
    const bool all = cfg.figure == "all";
    if (!cfg.output.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.output, ec);
        if (ec) throw IoFailure("cannot create directory '" + cfg.output + "': " + ec.message());
    }
    if (all || cfg.figure == "fig3") reproduce_figure(cfg, "fig3", kFig3State, ChannelKind::BitFlip, out);
    if (all || cfg.figure == "fig4") reproduce_figure(cfg, "fig4", kFig4State, ChannelKind::PhaseFlip, out);
    if (all || cfg.figure == "table1") reproduce_table1(cfg, out);
    if (all || cfg.figure == "table2") reproduce_table2(cfg, out);
}

// --- option wiring -------------------------------------------------------

void add_format(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_output(CLI::App* sub, RunConfig& cfg, const std::string& help = "Output file (default: standard output)") {
    sub->add_option("--output", cfg.output, help);
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--grid-theta", cfg.grid_theta, "Polar grid points per qubit");
    sub->add_option("--grid-phi", cfg.grid_phi, "Azimuthal grid points per qubit");
    sub->add_option("--refine", cfg.refine, "Local refinement rounds");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Coherence, discord and classical correlation of two-qubit Bell-diagonal states", "bellcoh"};
    app.require_subcommand(1);

    auto* measure = app.add_subcommand("measure", "Closed-form measures of one state");
    measure->add_option("--state", cfg.state, "c1,c2,c3")->required();
    measure->add_option("--axis", cfg.axis, "Also report coherences on this axis (1, 2 or 3)");
    add_format(measure, cfg);
    add_output(measure, cfg);

    auto* evolve = app.add_subcommand("evolve", "Trajectory under a channel on both qubits");
    evolve->add_option("--state", cfg.state, "c1,c2,c3")->required();
    evolve->add_option("--channel", cfg.channel, "bitflip, phaseflip or bitphaseflip")->required();
    evolve->add_option("--gamma", cfg.gamma, "Damping rate")->capture_default_str();
    evolve->add_option("--t-max", cfg.t_max, "End time")->capture_default_str();
    evolve->add_option("--steps", cfg.steps, "Number of time steps")->capture_default_str();
    evolve->add_flag("--self-check", cfg.self_check, "Re-validate I = CC + D on every emitted row");
    add_format(evolve, cfg);
    add_output(evolve, cfg);

    auto* transition = app.add_subcommand("transition", "Analytic and detected transition time");
    transition->add_option("--state", cfg.state, "c1,c2,c3")->required();
    transition->add_option("--channel", cfg.channel, "bitflip, phaseflip or bitphaseflip")->required();
    transition->add_option("--gamma", cfg.gamma, "Damping rate")->capture_default_str();
    transition->add_option("--steps", cfg.steps, "Number of time steps of the detection sweep")->capture_default_str();
    add_format(transition, cfg);
    add_output(transition, cfg);

    auto* oracle = app.add_subcommand("oracle-discord", "Numerical discords by measurement-basis search");
    oracle->add_option("--state", cfg.state, "c1,c2,c3");
    oracle->add_option("--matrix", cfg.matrix, "Density-matrix file");
    add_grid(oracle, cfg);
    add_format(oracle, cfg);
    add_output(oracle, cfg);

    auto* theorems = app.add_subcommand("verify-theorems", "Check the discord/coherence identities numerically");
    theorems->add_option("--state", cfg.state, "c1,c2,c3");
    theorems->add_option("--matrix", cfg.matrix, "Density-matrix file");
    add_grid(theorems, cfg);
    add_format(theorems, cfg);
    add_output(theorems, cfg);

    auto* reproduce = app.add_subcommand("reproduce", "Write the figure and table data sets");
    reproduce->add_option("figure", cfg.figure, "fig3, fig4, table1, table2 or all")
        ->required()
        ->check(CLI::IsMember({"fig3", "fig4", "table1", "table2", "all"}));
    reproduce->add_option("--seed", cfg.seed, "Seed for randomized audits")->capture_default_str();
    reproduce->add_flag("--self-check", cfg.self_check, "Re-validate I = CC + D on every emitted row");
    add_output(reproduce, cfg, "Output directory (default: current directory)");

    std::vector<const char*> argv{"bellcoh"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "bellcoh\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (char& ch : msg)
            if (ch == '\n') ch = ' ';
        err << "error: " << msg << '\n';
        return kExitInput;
    }

    try {
        if (*measure) cmd_measure(cfg, out);
        else if (*evolve) cmd_evolve(cfg, out);
        else if (*transition) cmd_transition(cfg, out);
        else if (*oracle) cmd_oracle_discord(cfg, out);
        else if (*theorems) cmd_verify_theorems(cfg, out);
        else if (*reproduce) cmd_reproduce(cfg, out);
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const SelfCheckFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace bellcoh::cli
