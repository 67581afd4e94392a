#include <iostream>

#include "ftpoly/cli.hpp"

int main(int argc, char** argv) { return ftpoly::run_cli(argc, argv, std::cout, std::cerr); }
