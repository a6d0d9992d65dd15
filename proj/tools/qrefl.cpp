#include <iostream>

#include "qrefl/cli.hpp"

int main(int argc, char** argv) { return qrefl::cli::run(argc, argv, std::cout, std::cerr); }
