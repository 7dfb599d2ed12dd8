#include "polylist/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return polylist::cli::run(argc, argv, std::cout, std::cerr); }
