#include "bellcoh/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "bellcoh/error.hpp"

namespace bellcoh {
namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_real(std::string_view s, std::string_view context) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw ParseError("invalid number '" + std::string(s) + "' in " + std::string(context));
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

BellDiagonalParams parse_state_literal(std::string_view text) {
    const auto parts = split(trim(text), ',');
    if (parts.size() != 3)
        throw ParseError("state literal must be c1,c2,c3, got '" + std::string(text) + "'");
    return {parse_real(parts[0], "state literal"), parse_real(parts[1], "state literal"),
            parse_real(parts[2], "state literal")};
}

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty complex entry");
    if (s.back() != 'j') return {parse_real(s, "matrix entry"), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    const auto imag_of = [&](std::string_view im) {
        if (im == "+" || im.empty()) return 1.0;
        if (im == "-") return -1.0;
        return parse_real(im, "matrix entry");
    };
    if (split_at == std::string_view::npos) return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, split_at), "matrix entry"), imag_of(body.substr(split_at))};
}

DensityMatrix parse_density_matrix(std::istream& in) {
    Mat4 m;
    std::size_t row = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (row == 4) throw ParseError("density matrix file has more than 4 rows");
        std::istringstream fields{std::string(t)};
        std::string tok;
        std::size_t col = 0;
        while (fields >> tok) {
            if (col == 4) throw ParseError("density matrix row " + std::to_string(row + 1) + " has more than 4 entries");
            m(row, col++) = parse_complex(tok);
        }
        if (col != 4) throw ParseError("density matrix row " + std::to_string(row + 1) + " has fewer than 4 entries");
        ++row;
    }
    if (row != 4) throw ParseError("density matrix file needs 4 rows, found " + std::to_string(row));
    return DensityMatrix(m);
}

DensityMatrix load_density_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return parse_density_matrix(in);
}

std::string format_density_matrix(const Mat4& m) {
    std::string out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const double im = m(r, c).imag();
            out += format_number(m(r, c).real());
            out += im < 0.0 ? "-" : "+";
            out += format_number(std::abs(im));
            out += 'j';
            out += c == 3 ? '\n' : ' ';
        }
    }
    return out;
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round_to_output(double v) {
    const std::string s = format_number(v);
    return std::strtod(s.c_str(), nullptr);
}

std::vector<std::string> trajectory_columns() {
    std::vector<std::string> cols;
    for (auto c : split(kTrajectoryCsvHeader, ',')) cols.emplace_back(c);
    return cols;
}

std::string csv_row(const TrajectorySample& s) {
    const auto& m = s.measures;
    std::string row;
    const auto put = [&](double v) {
        row += format_number(v);
        row += ',';
    };
    put(s.t);
    put(s.params.c1);
    put(s.params.c2);
    put(s.params.c3);
    put(m.mutual_information);
    put(m.classical_correlation);
    put(m.discord);
    for (double v : m.coherence_rel) put(v);
    for (double v : m.coherence_l1) put(v);
    row += std::to_string(axis_number(s.region.axis));
    row += ',';
    row += s.region.label();
    return row;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out(kTrajectoryCsvHeader);
    out += '\n';
    for (const auto& s : traj.samples) {
        out += csv_row(s);
        out += '\n';
    }
    return out;
}

std::string trajectory_json(const Trajectory& traj) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : traj.samples) {
        const auto& m = s.measures;
        nlohmann::ordered_json o;
        o["t"] = round_to_output(s.t);
        o["c1"] = round_to_output(s.params.c1);
        o["c2"] = round_to_output(s.params.c2);
        o["c3"] = round_to_output(s.params.c3);
        o["mutual_info"] = round_to_output(m.mutual_information);
        o["classical_corr"] = round_to_output(m.classical_correlation);
        o["discord"] = round_to_output(m.discord);
        for (PauliAxis a : kAllAxes)
            o["coherence_rel_" + std::to_string(axis_number(a))] = round_to_output(m.coherence_rel[axis_index(a)]);
        for (PauliAxis a : kAllAxes)
            o["coherence_l1_" + std::to_string(axis_number(a))] = round_to_output(m.coherence_l1[axis_index(a)]);
        o["optimal_axis"] = axis_number(s.region.axis);
        o["region"] = s.region.label();
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

int count_additivity_violations(std::string_view csv, double tolerance) {
    const auto cols = trajectory_columns();
    const auto index_of = [&](std::string_view name) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (cols[i] == name) return i;
        return cols.size();
    };
    const std::size_t i_mi = index_of("mutual_info");
    const std::size_t i_cc = index_of("classical_corr");
    const std::size_t i_d = index_of("discord");

    int violations = 0;
    bool header = true;
    for (auto line : split(csv, '\n')) {
        if (line.empty()) continue;
        if (header) {
            if (line != kTrajectoryCsvHeader) throw ParseError("unexpected CSV header");
            header = false;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != cols.size()) throw ParseError("CSV row has wrong number of fields");
        const double mi = parse_real(fields[i_mi], "CSV row");
        const double cc = parse_real(fields[i_cc], "CSV row");
        const double d = parse_real(fields[i_d], "CSV row");
        if (std::abs(mi - cc - d) > tolerance) ++violations;
    }
    if (header) throw ParseError("empty CSV");
    return violations;
}

}  // namespace bellcoh
