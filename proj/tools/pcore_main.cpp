#include <iostream>

#include "pcore/cli.hpp"

int main(int argc, char** argv) { return pcore::run_cli(argc, argv, std::cout, std::cerr); }
