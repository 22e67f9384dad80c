#pragma once

#include <stdexcept>
#include <string>

namespace flatstat {

enum class ErrorCode {
  Parse,
  NotAPermutation,
  NonStandardOrder,
  CapExceeded,
  InvalidPrefix,
  NotDivisible,
  OddPowerResidue,
  NotInvertible,
  UnknownName,
  MethodUnsupported,
  Range,
  Mismatch,
  ResidueTooLarge,
  PoleProximity,
  QuadratureFailure,
  NoConvergence,
  InvalidEncoding,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// command-line front end can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flatstat
