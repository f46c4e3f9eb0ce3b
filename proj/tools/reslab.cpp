#include "reslab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return reslab::cli::main_entry(argc, argv, std::cout, std::cerr); }
