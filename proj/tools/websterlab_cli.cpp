#include <iostream>
#include <string>
#include <vector>

#include "websterlab/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return websterlab::run_cli(args, std::cout);
}
