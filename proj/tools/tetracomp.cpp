#include <iostream>

#include "tetra/cli/cli.hpp"

int main(int argc, char** argv) { return tetra::cli::cli_main(argc, argv, std::cout, std::cerr); }
