#include <iostream>

#include "nvk/cli/cli.hpp"

int main(int argc, char** argv) { return nvk::cli::run(argc, argv, std::cout, std::cerr); }
