#include <iostream>

#include "rootres/cli.hpp"

int main(int argc, char** argv) { return rootres::run_cli(argc, argv, std::cout, std::cerr); }
