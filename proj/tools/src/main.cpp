#include <iostream>

#include "nhb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nhb::cli::run(args, std::cout, std::cerr);
}
