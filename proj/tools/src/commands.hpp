#pragma once

#include <iosfwd>

namespace circdiff::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInvalidDiffeo = 3;
inline constexpr int kNumerical = 4;

// Parses argv and runs one subcommand. Streams are injected so tests can drive the tool
// in-process; `--output` still writes to a file when given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace circdiff::cli
