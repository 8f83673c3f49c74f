#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace topicmetrics::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command line (without the program name). Help goes to `out`,
/// diagnostics and warnings to `err`; data is only ever written to files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topicmetrics::cli
