#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ispace::cli {

/// Exit codes of the `ispace` tool.
enum ExitCode : int {
  kSuccess = 0,
  /// A verification run found an equivalence or proposition violation.
  kVerificationFailed = 1,
  /// Bad command line, unreadable or malformed input, cap exceeded.
  kUsageError = 2,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ispace::cli
