#ifndef QALEX_TOOLS_CLI_HPP
#define QALEX_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qalex::cli {

// Exit codes of the qalex tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
};

// Runs the tool on `args` (without the program name). Payload goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalex::cli

#endif  // QALEX_TOOLS_CLI_HPP
