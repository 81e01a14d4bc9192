#include <iostream>

#include "schubvan/cli.hpp"

int main(int argc, char** argv) { return schubvan::run_cli(argc, argv, std::cout, std::cerr); }
