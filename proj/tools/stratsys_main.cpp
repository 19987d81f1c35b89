#include "stratsys/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return stratsys::cli::run(argc, argv, std::cout, std::cerr); }
