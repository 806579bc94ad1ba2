#include <iostream>
#include <string>
#include <vector>

#include "covkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return covkit::cli::run(args, std::cout, std::cerr);
}
