#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lapvertex {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitCertificateFailure = 1,
    kExitUsage = 2,
    kExitInput = 3,
    kExitNumerical = 4,
};

/// Runs the `lapvertex` command line. `args` excludes the program name. The JSON report goes
/// to `out` (or to --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 12 significant digits, the precision used for every real in a report.
double report_real(double value);

}  // namespace lapvertex
