#include <iostream>
#include <string>
#include <vector>

#include "nfai/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return nfai::cli::run(args, std::cout, std::cerr);
}
