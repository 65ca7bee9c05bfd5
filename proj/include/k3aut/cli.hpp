#pragma once

#include <string>
#include <vector>

namespace k3aut {

// Exit codes: 0 success, 1 a verification found a genuine mathematical
// discrepancy, 2 usage or input error, 3 computation error.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

// Full command-line surface, callable in-process (args exclude the program
// name). Never throws; failures are encoded in the exit code and output.
CommandResult run(const std::vector<std::string>& args);

}  // namespace k3aut
