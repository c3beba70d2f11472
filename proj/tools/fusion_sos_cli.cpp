#include <iostream>
#include <string>
#include <vector>

#include "fusion_sos/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fusion_sos::run_cli(args, std::cout, std::cerr);
}
