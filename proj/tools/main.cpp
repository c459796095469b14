#include <iostream>
#include <string>
#include <vector>

#include "skewrank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewrank::run(args, std::cout, std::cerr);
}
