#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdc::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,     // theorem violation, invalid certificate, unsolvable input
  kUsage = 2,         // argument or input parse error
  kResourceGuard = 3, // a size cap was exceeded
};

/// Runs one command line (args excludes the program name). Everything meant
/// for the user goes to `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tdc::cli
