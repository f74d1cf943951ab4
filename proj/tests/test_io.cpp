#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "bellcoh/error.hpp"
#include "bellcoh/io.hpp"
#include "support.hpp"

using namespace bellcoh;

TEST_CASE("parse_state_literal") {
    CHECK(parse_state_literal("0.6,-0.6,1") == BellDiagonalParams{0.6, -0.6, 1});
    CHECK(parse_state_literal(" -0.5 , -0.5,-0.5 ") == BellDiagonalParams{-0.5, -0.5, -0.5});
    CHECK(parse_state_literal("1e-1,0,0") == BellDiagonalParams{0.1, 0, 0});
    // Parsing does not check physicality.
    CHECK(parse_state_literal("1,1,1") == BellDiagonalParams{1, 1, 1});

    for (const char* bad : {"", "0.1,0.2", "0.1,0.2,0.3,0.4", "a,b,c", "0.1,,0.3", "0.1,0.2,0.3x", "nan,0,0",
                            "inf,0,0"})
        CHECK_THROWS_AS(parse_state_literal(bad), ParseError);
}

TEST_CASE("parse_complex") {
    CHECK(parse_complex("0.5") == Complex{0.5, 0});
    CHECK(parse_complex("-0.25") == Complex{-0.25, 0});
    CHECK(parse_complex("0.5j") == Complex{0, 0.5});
    CHECK(parse_complex("-j") == Complex{0, -1});
    CHECK(parse_complex("0.1+0.2j") == Complex{0.1, 0.2});
    CHECK(parse_complex("0.1-0.2j") == Complex{0.1, -0.2});
    CHECK(parse_complex("1e-3-2e-3j") == Complex{1e-3, -2e-3});
    for (const char* bad : {"", "j2", "1+", "0.1+0.2", "abc", "1+2jj"}) CHECK_THROWS_AS(parse_complex(bad), ParseError);
}

TEST_CASE("density matrix files") {
    std::istringstream bell(
        "# |Phi+>\n"
        "0.5 0 0 0.5\n"
        "\n"
        "0 0 0 0\n"
        "0 0 0 0\n"
        "0.5 0 0 0.5\n");
    const auto m = parse_density_matrix(bell);
    CHECK(max_abs_diff(m.matrix(), testing::bell_phi_plus()) == 0.0);

    std::istringstream complex_entries(
        "0.25 0 0 0.1j\n"
        "0 0.25 0 0\n"
        "0 0 0.25 0\n"
        "-0.1j 0 0 0.25\n");
    CHECK(parse_density_matrix(complex_entries)(0, 3) == Complex{0, 0.1});

    std::istringstream short_row("1 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    CHECK_THROWS_AS(parse_density_matrix(short_row), ParseError);
    std::istringstream three_rows("1 0 0 0\n0 0 0 0\n0 0 0 0\n");
    CHECK_THROWS_AS(parse_density_matrix(three_rows), ParseError);
    std::istringstream five_rows("1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    CHECK_THROWS_AS(parse_density_matrix(five_rows), ParseError);
    std::istringstream garbage("1 0 0 x\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    CHECK_THROWS_AS(parse_density_matrix(garbage), ParseError);
    std::istringstream not_state("1 0 0 0\n0 1 0 0\n0 0 0 0\n0 0 0 0\n");
    CHECK_THROWS_AS(parse_density_matrix(not_state), InvalidState);

    CHECK_THROWS_AS(load_density_matrix("/nonexistent/rho.txt"), ParseError);

    // format and parse round trip
    const auto rho = to_density_matrix({0.3, -0.2, 0.5}, PauliAxis::Axis2);
    std::istringstream again(format_density_matrix(rho.matrix()));
    CHECK(max_abs_diff(parse_density_matrix(again).matrix(), rho.matrix()) < 1e-12);
}

TEST_CASE("format_number") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.6) == "-0.6");
    CHECK(format_number(0.278071905112637652) == "0.278071905113");
    CHECK(format_number(1.278071905112637652) == "1.27807190511");
    CHECK(format_number(2.5e-17) == "2.5e-17");
    CHECK(round_to_output(0.278071905112637652) == 0.278071905113);
}

TEST_CASE("trajectory CSV and JSON") {
    const auto traj = sweep_trajectory({0.6, -0.6, 1}, {ChannelKind::BitFlip, 0.1}, 30.0, 300);
    const std::string csv = trajectory_csv(traj);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == kTrajectoryCsvHeader);
    std::getline(lines, line);
    CHECK(line == "0,0.6,-0.6,1,1.27807190511,1,0.278071905113,1,1,0.278071905113,1,1,0.6,3,C3");
    int rows = 1;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 301);
    CHECK(csv.back() == '\n');
    CHECK(count_additivity_violations(csv) == 0);

    const auto cols = trajectory_columns();
    CHECK(cols.size() == 15);
    CHECK(cols.front() == "t");
    CHECK(cols.back() == "region");

    const auto j = nlohmann::json::parse(trajectory_json(traj));
    REQUIRE(j.is_array());
    CHECK(j.size() == 301);
    for (const auto& c : cols) CHECK(j[0].contains(c));
    CHECK(j[0]["discord"].get<double>() == doctest::Approx(0.278071905113).epsilon(1e-12));
    CHECK(j[0]["optimal_axis"].get<int>() == 3);
    CHECK(j[0]["region"].get<std::string>() == "C3");
}

TEST_CASE("count_additivity_violations") {
    const std::string header(kTrajectoryCsvHeader);
    const std::string good = header + "\n0,0,0,0,0,0,0,0,0,0,0,0,0,1,BOUNDARY\n";
    CHECK(count_additivity_violations(good) == 0);
    const std::string bad = header + "\n0,0,0,0,1,0.5,0.4,0,0,0,0,0,0,1,BOUNDARY\n" +
                            "1,0,0,0,1,0.5,0.5,0,0,0,0,0,0,1,BOUNDARY\n";
    CHECK(count_additivity_violations(bad) == 1);
    CHECK_THROWS_AS(count_additivity_violations("a,b\n1,2\n"), ParseError);
    CHECK_THROWS_AS(count_additivity_violations(header + "\n0,0,0\n"), ParseError);
}
