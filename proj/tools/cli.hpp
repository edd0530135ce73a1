#pragma once

#include <iosfwd>

namespace umtk::cli {

enum ExitCode : int {
  kPositive = 0,
  kNegative = 1,
  kInputError = 2,
  kInternalFailure = 3,
};

/// Runs one umtk command. Results go to `out` (or the --out file),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace umtk::cli
