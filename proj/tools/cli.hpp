#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gramtok::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the `gramtok` command line. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

std::string version();

}  // namespace gramtok::cli
