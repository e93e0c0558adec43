#include <iostream>

#include "racg/cli.hpp"

int main(int argc, char** argv) { return racg::cli::run(argc, argv, std::cout, std::cerr); }
