#pragma once

// Text formats: state literals, density-matrix files, and the trajectory
// CSV/JSON schema.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bellcoh/dynamics.hpp"
#include "bellcoh/linalg.hpp"
#include "bellcoh/qstate.hpp"

namespace bellcoh {

// "c1,c2,c3", e.g. "0.6,-0.6,1". Throws ParseError.
BellDiagonalParams parse_state_literal(std::string_view text);

// "re+imj", "re-imj", "re" or "imj". Throws ParseError.
Complex parse_complex(std::string_view text);

// Four lines of four whitespace-separated complex entries. Blank lines and
// lines starting with '#' are skipped. Throws ParseError on malformed text
// and InvalidState when the matrix is not a density matrix.
DensityMatrix parse_density_matrix(std::istream& in);
DensityMatrix load_density_matrix(const std::string& path);

std::string format_density_matrix(const Mat4& m);

// 12 significant digits, '.' separator; negative zero prints as 0.
std::string format_number(double v);

// Value of format_number(v) read back as a double.
double round_to_output(double v);

inline constexpr std::string_view kTrajectoryCsvHeader =
    "t,c1,c2,c3,mutual_info,classical_corr,discord,coherence_rel_1,coherence_rel_2,coherence_rel_3,"
    "coherence_l1_1,coherence_l1_2,coherence_l1_3,optimal_axis,region";

// Column names in header order.
std::vector<std::string> trajectory_columns();

// One CSV line (no newline) for a sample.
std::string csv_row(const TrajectorySample& s);

// Header plus one line per sample, each terminated by '\n'.
std::string trajectory_csv(const Trajectory& traj);

// JSON array with one object per sample, keys as the CSV columns.
std::string trajectory_json(const Trajectory& traj);

// Checks every data row of a trajectory CSV for
// |mutual_info - classical_corr - discord| <= tolerance. Returns the number
// of offending rows; throws ParseError on malformed input.
int count_additivity_violations(std::string_view csv, double tolerance = 1e-10);

}  // namespace bellcoh
