#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbhrr::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kModelIntegrityFailure = 3,
    kConsistencyFailure = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns one of the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbhrr::cli
