#include <iostream>

#include "skewfree/cli.hpp"

int main(int argc, char** argv) { return skewfree::cli::main(argc, argv, std::cout, std::cerr); }
