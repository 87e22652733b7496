#include <iostream>
#include <string>
#include <vector>

#include "kbs4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kbs4::cli::run(args, std::cout, std::cerr);
}
