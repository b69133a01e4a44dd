#pragma once

#include <iosfwd>

namespace aspectral {

// Exit codes: 0 success, 1 mathematical non-applicability (operator outside
// M^A, not A-invertible, failing law), 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotApplicable = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aspectral
