#include <iostream>

#include "alphar/cli.hpp"

int main(int argc, char** argv) { return alphar::cli::run(argc, argv, std::cout, std::cerr); }
