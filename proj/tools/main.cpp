#include <iostream>

#include "aspectral/cli.hpp"

int main(int argc, char** argv) { return aspectral::run_cli(argc, argv, std::cout, std::cerr); }
