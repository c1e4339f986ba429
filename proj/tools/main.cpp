#include <iostream>

#include "svol_cli.hpp"

int main(int argc, char** argv) { return svol::cli::run(argc, argv, std::cout, std::cerr); }
