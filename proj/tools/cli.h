#ifndef FAIRDIV_TOOLS_CLI_H_
#define FAIRDIV_TOOLS_CLI_H_

#include <ostream>

namespace fairdiv::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitViolation = 4;

// Runs the fairdiv command line. JSON and CSV go to `out`, diagnostics to
// `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace fairdiv::cli

#endif  // FAIRDIV_TOOLS_CLI_H_
