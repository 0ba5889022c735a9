#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagcount {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Runs the command line given without the program name.  Exit status: 0 on
/// success, 2 on usage or validation errors, 3 when a verification fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagcount
