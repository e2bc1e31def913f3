#include <iostream>

#include "nst/cli.hpp"

int main(int argc, char** argv) { return nst::run_cli(argc, argv, std::cout, std::cerr); }
