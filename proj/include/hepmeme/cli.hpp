#pragma once

#include <iosfwd>

namespace hepmeme::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // oracle mismatch
  kInputError = 2,
  kRefused = 3,  // snapshot exists and --force absent
  kConfigError = 4,
  kInsufficientData = 5,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hepmeme::cli
