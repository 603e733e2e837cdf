#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bicumulant::cli::run(argc, argv, std::cout, std::cerr); }
