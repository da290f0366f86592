#include "qcodes/error.hpp"

namespace qcodes {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kPartsNotCoprime: return "PartsNotCoprime";
    case ErrorCode::kEqualPrimes: return "EqualPrimes";
    case ErrorCode::kUnrepresentable: return "Unrepresentable";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kCandidateNotPrimitive: return "CandidateNotPrimitive";
    case ErrorCode::kNonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::kRootCheckFailed: return "RootCheckFailed";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSyndromeCollision: return "SyndromeCollision";
    case ErrorCode::kGuardExceeded: return "GuardExceeded";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

NotAUnitError::NotAUnitError(const std::string& message, std::int64_t gcd_witness)
    : Error(ErrorCode::kNotAUnit, message), gcd_witness_(gcd_witness) {}

void throw_overflow(const char* operation) {
  throw Error(ErrorCode::kOverflow, std::string("64-bit integer overflow in ") + operation);
}

}  // namespace qcodes
