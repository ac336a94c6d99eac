#include <iostream>

#include "stablab/cli/cli.hpp"

int main(int argc, char** argv) { return stablab::cli::run(argc, argv, std::cout); }
