#include <iostream>
#include <string>
#include <vector>

#include "rolestat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rolestat::cli::run(args, std::cout, std::cerr);
}
