#include <iostream>
#include <string>
#include <vector>

#include "qf2/cli/commands.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qf2::cli::run(args, std::cin, std::cout, std::cerr);
}
