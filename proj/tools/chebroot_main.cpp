#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "chebroot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_eps;
  if (const char* v = std::getenv("CHEBROOT_EPS_TANGENT")) env_eps = v;
  return chebroot::cli::run_cli(args, {std::cout, std::cerr, env_eps});
}
