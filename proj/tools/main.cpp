#include <iostream>

#include "deltaforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return deltaforge::run_cli(args, std::cout, std::cerr);
}
