#pragma once

#include <iosfwd>

namespace transint::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kTrue = 0,         // property holds / verified
  kFalse = 1,        // property fails / refuted
  kUsage = 2,        // usage, parse or domain error, timeout
  kConsistency = 3,  // internal consistency violation
};

/// Parses argv, runs one command and returns its exit code. All output goes
/// to `out` and `err`; nothing is written to the process streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace transint::cli
