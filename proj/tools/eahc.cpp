#include <iostream>

#include "eah/cli/commands.hpp"

int main(int argc, char** argv) { return eah::cli::run(argc, argv, std::cout, std::cerr); }
