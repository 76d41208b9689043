#include <iostream>

#include "qgtile/cli.hpp"

int main(int argc, char** argv) { return qgtile::run_cli(argc, argv, std::cout, std::cerr); }
