#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stratsys::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses arguments (argv[0] is the program name), runs one subcommand and
/// writes its report to `out` (JSON with --json, a table otherwise).
/// Returns 0 when every check passed, 1 when one failed, 2 on bad usage or input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratsys::cli
