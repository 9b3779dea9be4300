#pragma once

#include <iosfwd>

namespace tagix::cli {

enum ExitCode : int { kOk = 0, kRuntimeError = 1, kUsageError = 2 };

// Entry point for `tagix build|dump|stats|query|classify`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tagix::cli
