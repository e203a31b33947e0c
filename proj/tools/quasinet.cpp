#include <iostream>

#include "quasinet/cli.hpp"

int main(int argc, char** argv) { return quasinet::cli::run(argc, argv, std::cout, std::cerr); }
