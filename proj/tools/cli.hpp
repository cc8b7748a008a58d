#pragma once

#include <iosfwd>

namespace dhall::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceBound = 3,
};

// Runs the command line in-process; everything is printed to `out`/`err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dhall::cli
