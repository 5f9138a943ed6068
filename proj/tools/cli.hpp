#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dupdist::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`; `in` backs "-" inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

/// Largest sequence accepted by `distance` in exact mode.
inline constexpr int kDistanceCap = 24;
/// Largest sequence accepted by `distance --beta`.
inline constexpr int kBetaDistanceCap = 14;
/// `table` and `fnm` at or above this length print a memory warning.
inline constexpr int kBigMemoryFrom = 25;

}  // namespace dupdist::cli
