#include <iostream>

#include "tropsing/cli.hpp"

int main(int argc, char** argv) { return tropsing::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
