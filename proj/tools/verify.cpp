#include <iostream>
#include <string>
#include <vector>

#include "fqv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fqv::verify_main(args, std::cout, std::cerr);
}
