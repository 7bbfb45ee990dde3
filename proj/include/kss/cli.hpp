#pragma once

#include "kss/document.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace kss {

/// Stable process exit codes of the `kss` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidConfig = 1,
    kExitClosedFormMismatch = 2,
    kExitCertificationFailure = 3,
};

/// Exit code a finished document maps to: 2 when `compare` is set and the
/// closed forms disagree with enumeration, 3 when certification failed.
int exit_code_for(const ResultDocument& doc, bool compare);

/// Runs the command line `args` (without the program name). Documents and
/// error blocks go to --out when given, else to `out`; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kss
