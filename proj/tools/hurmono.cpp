#include <iostream>
#include <string>
#include <vector>

#include "hurmono/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hurmono::cli::run(args, std::cout, std::cerr);
}
