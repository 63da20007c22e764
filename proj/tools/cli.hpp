#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace lpsplit::cli {

/** Exit codes shared by every subcommand. */
enum ExitCode : int {
  kOk = 0,
  kDisconnected = 1,
  kUsageError = 2,
};

/**
 * Run the command line `lpsplit <args...>` (args exclude the program name).
 * Reports and help go to out, diagnostics to err.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpsplit::cli
