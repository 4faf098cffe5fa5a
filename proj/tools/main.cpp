#include <iostream>

#include "omega_lift/cli.hpp"

int main(int argc, char** argv) { return omega_lift::run_cli(argc, argv, std::cout, std::cerr); }
