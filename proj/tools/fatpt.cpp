#include <iostream>

#include "fatpt/cli.hpp"

int main(int argc, char** argv) { return fatpt::cli::run(argc, argv, std::cout, std::cerr); }
