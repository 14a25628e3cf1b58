#ifndef OMFRAME_CLI_RUN_HPP
#define OMFRAME_CLI_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace omframe::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitDomain = 3,
};

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (without the program name). `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace omframe::cli

#endif
