#include <iostream>

#include "ostro/cli.hpp"

int main(int argc, char** argv) { return ostro::cli::main(argc, argv, std::cout, std::cerr); }
