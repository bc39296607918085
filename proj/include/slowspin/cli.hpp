#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slowspin::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kDomainError = 3,
  kNumericalFailure = 4,
};

/// Runs the command line `args` (without the program name). Tables go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slowspin::cli
