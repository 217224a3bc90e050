#include "bbinv/error.hpp"

namespace bbinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SameIndex: return "SameIndex";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::CaseBPreconditionViolated: return "CaseBPreconditionViolated";
    case ErrorCode::NoNonpositiveEntry: return "NoNonpositiveEntry";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotDivisibleBy4: return "NotDivisibleBy4";
    case ErrorCode::PolygonInvalid: return "PolygonInvalid";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace bbinv
