#include <iostream>
#include <string>
#include <vector>

#include "lambda_gs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return lambda_gs::run_cli(args, std::cout, std::cerr);
}
