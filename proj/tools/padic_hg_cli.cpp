#include <iostream>

#include "padic_hg/cli.hpp"

int main(int argc, char** argv) { return padic_hg::run_cli(argc, argv, std::cout, std::cerr); }
