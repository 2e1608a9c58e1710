#include <iostream>
#include <string>
#include <vector>

#include "hodd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hodd::dispatch(args, std::cout, std::cerr);
}
