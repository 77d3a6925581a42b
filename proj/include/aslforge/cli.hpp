#pragma once

#include <ostream>

namespace aslforge::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Entry point behind the asl-forge executable. Writes results to `out`
/// (unless --output redirects them) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aslforge::cli
