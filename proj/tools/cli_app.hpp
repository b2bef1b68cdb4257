#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobsthal::cli {

/// Exit codes: 0 success / all identities pass, 1 an identity failed,
/// 2 usage or domain error.
enum ExitCode : int { kSuccess = 0, kIdentityFailure = 1, kUsageError = 2 };

/// Runs one invocation. args excludes the program name. Results go to out
/// (or the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacobsthal::cli
