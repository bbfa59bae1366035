#include <iostream>

#include "nadyn/cli/run.hpp"

int main(int argc, char** argv) { return nadyn::cli::main_entry(argc, argv, std::cout, std::cerr); }
