#include <iostream>
#include <string>
#include <vector>

#include "astck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return astck::cli::run(args, std::cout, std::cerr);
}
