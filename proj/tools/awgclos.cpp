#include "awgclos/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return awgclos::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
