#include <iostream>

#include "opetope/cli.hpp"

int main(int argc, char** argv) { return opetope::run_cli(argc, argv, std::cout, std::cerr); }
