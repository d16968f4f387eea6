#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p2lsg::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRuntime = 2;
inline constexpr int kIo = 3;

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p2lsg::cli
