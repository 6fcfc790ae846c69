#pragma once

#include <iosfwd>

namespace ggraph::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 1;
inline constexpr int kParse = 2;
inline constexpr int kCap = 3;

// Default upper bound on n for graph and verify commands (lifted by --force).
inline constexpr int kGraphCap = 8;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ggraph::cli
