#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbinv::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kValidationFailure = 1,
  kBoundViolation = 2,  // a theorem-level check failed: implementation defect
  kIoError = 3,
  kUsage = 64,
};

/// Runs one subcommand. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bbinv::cli
