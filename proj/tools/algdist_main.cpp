#include <iostream>

#include "algdist/cli.hpp"

int main(int argc, char** argv) { return algdist::run_cli(argc, argv, std::cout, std::cerr); }
