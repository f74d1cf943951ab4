#include "bellcoh/cli.hpp"

int main(int argc, char** argv) { return bellcoh::cli::main(argc, argv); }
