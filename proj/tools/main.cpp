#include <iostream>
#include <string>
#include <vector>

#include "mecdsa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mecdsa::cli::run(args, std::cin, std::cout, std::cerr);
}
