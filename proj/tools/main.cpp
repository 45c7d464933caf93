#include "genusgrid/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return genusgrid::run_cli(argc, argv, std::cout, std::cerr); }
