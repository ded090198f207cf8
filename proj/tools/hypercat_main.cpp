#include <iostream>
#include <string>
#include <vector>

#include "hypercat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypercat::cli_run(args, std::cout, std::cerr);
}
