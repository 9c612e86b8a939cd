#include <iostream>

#include "mkw/cli.hpp"

int main(int argc, char** argv) { return mkw::run_cli(argc, argv, std::cout, std::cerr); }
