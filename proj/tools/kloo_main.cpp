#include <iostream>

#include "kloo/cli.hpp"

int main(int argc, char** argv) { return kloo::run_cli(argc, argv, std::cout, std::cerr); }
