#include <iostream>
#include <string>
#include <vector>

#include "comtrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return comtrace::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
