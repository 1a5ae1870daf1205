#include <iostream>

#include "linefit/cli.hpp"

int main(int argc, char** argv) {
  return linefit::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
