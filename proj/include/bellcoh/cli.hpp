#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bellcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;

// Runs the command line (args excludes the program name). Returns 0 on
// success, 2 on invalid input and 3 on output failure; diagnostics go to err
// as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace bellcoh::cli
