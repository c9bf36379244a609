#include <iostream>

#include "filtcx/cli.hpp"

int main(int argc, char** argv) { return filtcx::cli::run(argc, argv, std::cout, std::cerr); }
