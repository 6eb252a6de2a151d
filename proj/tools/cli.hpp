#ifndef WILDVF_TOOLS_CLI_HPP
#define WILDVF_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wildvf::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kVerificationFailed = 3,
};

/// Runs one subcommand. args excludes the program name; "-" as an input
/// path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wildvf::cli

#endif
