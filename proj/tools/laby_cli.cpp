#include <iostream>

#include "laby/cli.hpp"

int main(int argc, char** argv) { return laby::run_cli(argc, argv, std::cout, std::cerr); }
