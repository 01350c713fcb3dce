#include <iostream>

#include "nikitin/cli.hpp"

int main(int argc, char** argv) { return nikitin::cli_main(argc, argv, std::cout, std::cerr); }
