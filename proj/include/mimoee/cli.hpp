#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mimoee {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kDomainError = 3,
    kCapHit = 4,
    kValidationFailed = 5,
};

/// Runs the command line given argv-style arguments (without argv[0]).
/// All CSV/report output goes to `out` unless --out redirects it to a file;
/// diagnostics go to `err`. Returns an ExitCode.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mimoee
