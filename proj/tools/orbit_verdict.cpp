#include <iostream>
#include <string>
#include <vector>

#include "orbit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbit::cli::run(args, std::cin, std::cout, std::cerr);
}
