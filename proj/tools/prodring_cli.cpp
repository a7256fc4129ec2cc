#include <iostream>

#include "prodring/cli.hpp"

int main(int argc, char** argv) { return prodring::run_cli(argc, argv, std::cout, std::cerr); }
