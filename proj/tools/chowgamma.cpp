#include <iostream>

#include "chowgamma/cli.hpp"

int main(int argc, char** argv) { return chowgamma::run_cli(argc, argv, std::cout, std::cerr); }
