#include <iostream>

#include "opstar/cli.hpp"

int main(int argc, char** argv) { return opstar::cli::main(argc, argv, std::cout, std::cerr); }
