#include <iostream>

#include "veds/cli.hpp"

int main(int argc, char** argv) { return veds::cli::run(argc, argv, std::cout, std::cerr); }
