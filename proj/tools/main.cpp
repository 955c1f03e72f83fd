#include <iostream>

#include "s3q/cli.hpp"

int main(int argc, char** argv) { return s3q::run_cli(argc, argv, std::cout, std::cerr); }
