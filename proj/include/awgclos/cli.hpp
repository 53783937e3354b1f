#ifndef AWGCLOS_CLI_HPP_INCLUDED
#define AWGCLOS_CLI_HPP_INCLUDED

#include <iosfwd>

namespace awgclos {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1, ///< verification or feasibility failure
  kExitUsage = 2,
};

/// Runs one command line. Artifacts go to `out`, diagnostics and errors to
/// `err`; `in` backs the "-" file argument.
int run_cli(int argc, const char *const *argv, std::istream &in,
            std::ostream &out, std::ostream &err);

} // namespace awgclos

#endif // AWGCLOS_CLI_HPP_INCLUDED
