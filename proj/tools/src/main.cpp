#include <iostream>

#include "chaosrates_cli/cli.hpp"

int main(int argc, char** argv) { return chaosrates::cli::run(argc, argv, std::cout, std::cerr); }
