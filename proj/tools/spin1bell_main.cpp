#include <iostream>
#include <string>
#include <vector>

#include "spin1bell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spin1bell::cli::run(args, std::cout, std::cerr);
}
