#include <iostream>

#include "symtutte/cli.hpp"

int main(int argc, char** argv) {
  return symtutte::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
