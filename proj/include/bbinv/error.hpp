#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bbinv {

enum class ErrorCode {
  NotOrthonormal,
  TooFewRows,
  NonFinite,
  DegenerateSample,
  IndexOutOfRange,
  SameIndex,
  ZeroRow,
  ConfigInvalid,
  CaseBPreconditionViolated,
  NoNonpositiveEntry,
  PreconditionViolated,
  NotDivisibleBy4,
  PolygonInvalid,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Validation failures are reported by throwing Error; the code identifies
/// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Compact number for diagnostics ("1e-10" rather than "0.000000").
inline std::string diag_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace bbinv
