#pragma once

#include <iosfwd>

namespace omega_lift {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInternal = 3 };

/// Entry point of the omega-lift command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omega_lift
