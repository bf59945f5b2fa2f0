#ifndef MCALG_CLI_HPP
#define MCALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "mcalg/algebra.hpp"

namespace mcalg::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kResourceCap = 3,
  kSelfAuditFailure = 4,
};

/// Verdicts never fail a run; a non-empty implication audit does.
int classify_exit_code(const OperatorReport& report);

/// Entry point shared by the `mcalg` binary and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcalg::cli

#endif  // MCALG_CLI_HPP
