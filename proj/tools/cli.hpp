#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

/// Parses and runs one command line (program name excluded).
///
/// Exit codes: 0 on success, 2 for usage and precondition errors, 1 when a
/// constructed result fails its own re-check; in that case the offending
/// tree is written to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
