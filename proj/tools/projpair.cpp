#include <iostream>
#include <string>
#include <vector>

#include "projpair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return projpair::cli::run(args, std::cout);
}
