#include <iostream>

#include "heun_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heun::cli::run(args, std::cout, std::cerr);
}
