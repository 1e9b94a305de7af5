#pragma once

#include <iosfwd>

namespace alphar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Parses argv, dispatches to one subcommand and writes its JSON (or CSV)
/// result to `out` or the --out file. Errors go to `err` as a JSON object.
/// Returns 0, 2 (usage, range or parse error) or 3 (resource limit).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alphar::cli
