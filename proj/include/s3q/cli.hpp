#ifndef S3Q_CLI_HPP
#define S3Q_CLI_HPP

#include <ostream>

namespace s3q {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitCertification = 3 };

/// Parses argv and runs one subcommand. Reports go to `out` (or the --out
/// file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace s3q

#endif
