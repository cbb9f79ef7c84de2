#include <iostream>

#include "cebit/cli.hpp"

int main(int argc, char** argv) { return cebit::cli_main(argc, argv, std::cout, std::cerr); }
