#include <iostream>

#include "aslforge/cli.hpp"

int main(int argc, char** argv) { return aslforge::cli::run(argc, argv, std::cout, std::cerr); }
