#include "flatstat/error.hpp"

namespace flatstat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NonStandardOrder: return "NonStandardOrder";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPrefix: return "InvalidPrefix";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OddPowerResidue: return "OddPowerResidue";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::MethodUnsupported: return "MethodUnsupported";
    case ErrorCode::Range: return "RangeError";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::ResidueTooLarge: return "ResidueTooLarge";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidEncoding: return "InvalidEncoding";
  }
  return "Unknown";
}

}  // namespace flatstat
