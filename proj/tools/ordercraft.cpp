#include <iostream>

#include "ordercraft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oc::dispatch(args, std::cout, std::cerr);
}
