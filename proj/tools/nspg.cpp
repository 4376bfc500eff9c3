#include <iostream>
#include <string>
#include <vector>

#include "nspg/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return nspg::cli::execute(args, std::cout, std::cerr);
}
