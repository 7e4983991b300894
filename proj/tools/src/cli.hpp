#pragma once

#include <iosfwd>

namespace factlab::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Parses argv, runs one subcommand and writes records to `out` (or the file
/// named by --output) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace factlab::cli
