#ifndef TRIGONAL_CLI_HPP
#define TRIGONAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace trigonal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigonal::cli

#endif  // TRIGONAL_CLI_HPP
