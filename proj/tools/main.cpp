#include "k3aut/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  k3aut::CommandResult result = k3aut::run(args);
  std::cout << result.output;
  if (!result.output.empty() && result.output.back() != '\n') std::cout << '\n';
  return result.exit_code;
}
