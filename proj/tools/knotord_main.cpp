#include <iostream>

#include "knotord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotord::run(args, std::cout, std::cerr);
}
