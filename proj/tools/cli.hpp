#ifndef QES_TOOLS_CLI_HPP
#define QES_TOOLS_CLI_HPP

#include <ostream>

namespace qes::cli {

// Exit codes: 0 ok, 1 usage or engine error, 2 a verification check failed.
enum ExitCode : int { kOk = 0, kError = 1, kCheckFailed = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qes::cli

#endif
