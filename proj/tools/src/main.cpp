#include <iostream>

#include "eulerfan/cli/commands.hpp"

int main(int argc, char** argv) { return eulerfan::cli::run(argc, argv, std::cout, std::cerr); }
