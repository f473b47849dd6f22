#include <iostream>
#include <string>
#include <vector>

#include "opuc_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return opuc::tools::run_cli(args, std::cout, std::cerr);
}
