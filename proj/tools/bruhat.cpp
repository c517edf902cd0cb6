#include <iostream>

#include "bruhat/cli.hpp"

int main(int argc, char** argv) { return bruhat::cli::run(argc, argv, std::cout, std::cerr); }
