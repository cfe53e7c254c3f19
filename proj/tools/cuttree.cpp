#include <iostream>
#include <string>
#include <vector>

#include "cuttree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuttree::run_cli(args, std::cout, std::cerr);
}
