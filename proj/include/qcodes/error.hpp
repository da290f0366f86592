#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcodes {

enum class ErrorCode {
  kOverflow,
  kParse,
  kInvalidArgument,
  kNotPrime,
  kPartsNotCoprime,
  kEqualPrimes,
  kUnrepresentable,
  kModulusMismatch,
  kNotAUnit,
  kCandidateNotPrimitive,
  kNonUnitLeadingCoefficient,
  kDivisionByZeroPoly,
  kRootCheckFailed,
  kLengthMismatch,
  kSyndromeCollision,
  kGuardExceeded,
  kNotFound,
  kInternalContradiction,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. Carries a machine-readable code
/// next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an element expected to be invertible shares a factor with the
/// ring norm. `gcd_witness` is gcd(to_integer(x), N) > 1.
class NotAUnitError : public Error {
 public:
  NotAUnitError(const std::string& message, std::int64_t gcd_witness);

  std::int64_t gcd_witness() const noexcept { return gcd_witness_; }

 private:
  std::int64_t gcd_witness_;
};

[[noreturn]] void throw_overflow(const char* operation);

}  // namespace qcodes
