#pragma once

#include <ostream>

namespace qent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Parses `argv`, runs the requested subcommand and writes its table to `out`
/// (or the --out file). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qent::cli
