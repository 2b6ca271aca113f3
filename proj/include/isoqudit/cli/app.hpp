#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isoqudit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnwritable = 3;
inline constexpr int kExitCacheCorrupt = 4;

/// Runs one invocation; args exclude the program name. Reads ISOQUDIT_CACHE for the
/// default scan cache. A `--config FILE` of key=value lines supplies flags that are not
/// given on the command line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoqudit::cli
