#ifndef MDT_CLI_HPP
#define MDT_CLI_HPP

#include <iosfwd>

namespace mdt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitPropertyFailure = 4;

/// Dispatches the subcommands (compute, sweep, export-ip, check) and
/// returns the process exit code. Streams are injected for testability.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mdt::cli

#endif
