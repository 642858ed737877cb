#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mono {

  /// Exit codes of the mono command.
  enum ExitCode : int {
    exit_ok       = 0,  // holds / success
    exit_violated = 1,  // verdict violated, hypothesis failure, property fails
    exit_input    = 2,  // unreadable or malformed input
  };

  /// Runs the mono command line; args excludes the program name. Reports go
  /// to out, diagnostics to err.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace mono
