#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return pade::cli::main(argc, argv, std::cout, std::cerr); }
