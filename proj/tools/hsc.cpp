#include <iostream>
#include <string>
#include <vector>

#include "hsc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hsc::cli::main_entry(args, std::cout, std::cerr);
}
