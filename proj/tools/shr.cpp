#include <iostream>
#include <string>
#include <vector>

#include "shr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shr::run_cli(args, std::cout, std::cerr);
}
