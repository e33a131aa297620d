#ifndef LSPACE_CLI_HPP
#define LSPACE_CLI_HPP

#include <string>
#include <vector>

namespace lspace {

struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

// Dispatches a command line (without the program name).  Exit codes:
// 0 success, 1 property failure, 2 input or usage error.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace lspace

#endif  // LSPACE_CLI_HPP
