#include <iostream>

#include "posres/cli.hpp"

int main(int argc, char** argv) { return posres::run_cli(argc, argv, std::cout, std::cerr); }
