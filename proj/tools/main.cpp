#include <iostream>
#include <string>
#include <vector>

#include "pgspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pgspec::run_cli(args, std::cout, std::cerr);
}
