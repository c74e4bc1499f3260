#include <iostream>

#include "m0n/cli.hpp"

int main(int argc, char** argv) { return m0n::cli::main(argc, argv, std::cout, std::cerr); }
