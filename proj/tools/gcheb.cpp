#include <iostream>

#include "gcheb/cli.hpp"

int main(int argc, char** argv) { return gcheb::cli::run(argc, argv, std::cout, std::cerr); }
