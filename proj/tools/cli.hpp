#pragma once

#include <iosfwd>

namespace circdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitHypothesisNotMet = 2;
inline constexpr int kExitUnverified = 3;
inline constexpr int kExitAuditFailed = 4;

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circdom::cli
