#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levelone::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Parses argv (argv[0] is the program name), runs the subcommand and
/// returns the process exit code.  All output goes to out / err.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace levelone::cli
