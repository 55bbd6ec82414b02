#ifndef CRAMER_LGV_CLI_HPP
#define CRAMER_LGV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kSingular = 3,
    kInternal = 4,
    kResource = 5,
};

ExitCode exit_code_for(ErrorCode code);

/// Runs one command line (args[0] is the program name) against the given
/// streams and returns the process exit status.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cramer_lgv::cli

#endif  // CRAMER_LGV_CLI_HPP
