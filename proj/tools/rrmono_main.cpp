#include <iostream>
#include <string>
#include <vector>

#include "rrmono/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rrmono::run_cli(args, std::cout, std::cerr);
}
