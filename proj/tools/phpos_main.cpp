#include <iostream>

#include "phpos/cli.hpp"

int main(int argc, char** argv) { return phpos::cli::run(argc, argv, std::cout, std::cerr); }
