#ifndef GWDEG_CLI_HPP
#define GWDEG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gwdeg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command line (without the program name). Results go to `out`
/// as JSON or CSV; diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwdeg::cli

#endif  // GWDEG_CLI_HPP
