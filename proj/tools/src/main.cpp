#include <iostream>

#include "rbt_cli/cli.hpp"

int main(int argc, char** argv) { return rbt::cli::run_cli(argc, argv, std::cout, std::cerr); }
