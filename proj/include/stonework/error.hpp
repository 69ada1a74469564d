#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stonework {

enum class ErrorCode {
  InvalidTolerance,
  NotHermitian,
  NoConvergence,
  NotProjection,
  DimensionMismatch,
  NotNormalized,
  ZeroModule,
  NotAbelian,
  NotPartialIsometry,
  NotSubordinate,
  CarrierMismatch,
  ClosureExplosion,
  NotMember,
  Ambiguous,
  AlreadyMember,
  NotUnitary,
  EmptyFilter,
  NotSelfAdjoint,
  NotFilterBase,
  OutOfRange,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stonework
