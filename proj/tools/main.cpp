#include "commeval/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return commeval::run_cli(argc, argv, std::cout, std::cerr); }
