#include <iostream>

#include "ptweyl/cli/commands.hpp"

int main(int argc, char **argv) { return ptweyl::cli::main_entry(argc, argv, std::cout, std::cerr); }
