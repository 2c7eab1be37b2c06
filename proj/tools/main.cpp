#include <iostream>

#include "opforge/cli/app.hpp"

int main(int argc, char** argv) { return opforge::cli::run(argc, argv, std::cout, std::cerr); }
