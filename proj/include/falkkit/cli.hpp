#ifndef FALKKIT_CLI_HPP
#define FALKKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace falkkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1;     ///< hypotheses of the requested route fail
inline constexpr int kExitInputError = 2;  ///< bad arguments, unreadable or malformed file

/// `falkkit <subcommand> <file> [--json] [--method=comb|rank|both]`.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace falkkit

#endif  // FALKKIT_CLI_HPP
