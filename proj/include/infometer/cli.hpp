#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infometer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kVersion = "0.1.0";

/// Runs the command line `args` (args[0] is the program name) writing data to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace infometer::cli
