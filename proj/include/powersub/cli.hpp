#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powersub {

/// Exit codes: 0 success / all checks pass, 1 verification failure,
/// 2 usage or parse error.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name).
///
///   analyze <SPEC> [--json|--csv]
///   verify [--max-order N] [--verbose]
///   spectrum [--max-order N] [--k-max K] [--json]
///   search --k K [--max-order N]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace powersub
