#ifndef BCN_TOOLS_CLI_HPP
#define BCN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bcn::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // unreadable file, parse error
  kUnknown = 2,  // sufficient condition not met / oracle says not observable
  kInconsistentTrace = 3,
  kShortTrace = 4,
  kOracleCap = 5,
  kUsage = 64,
};

/// Runs the `bcnobs` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcn::cli

#endif  // BCN_TOOLS_CLI_HPP
