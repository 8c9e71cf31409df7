#include <iostream>
#include <string>
#include <vector>

#include "qrep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qrep::run_cli(args, std::cout, std::cerr);
}
