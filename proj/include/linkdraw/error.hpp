#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkdraw {

enum class ErrorCode {
  // algebra
  NotInvertible,
  DegenerateActor,
  NotRotation,
  // polynomials
  NotMonic,
  DivisionByZeroPoly,
  ZeroPolynomial,
  HasRealRoot,
  IrreducibleFactorNotQuadraticOverRationals,
  NotIrreducible,
  NoRationalZeroInDirection,
  NotRepresentable,
  SearchExhausted,
  // motion
  Unbounded,
  InvalidCurve,
  NotMotionPolynomial,
  NonInvertibleRemainderLead,
  NotGeneric,
  NotTame,
  ZeroPickExhausted,
  // linkage
  FlipUndefined,
  InvalidDegreeParity,
  UserM0Invalid,
  ModeUnsupported,
  // verify
  Mismatch,
  ClosureViolation,
  // io
  ParseError,
  IOError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. The code is stable and machine
// checkable; the message carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 protected:
  Error(ErrorCode code, const std::string& what, const std::string& detail)
      : std::runtime_error(what), code_(code), detail_(detail) {}

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace linkdraw
