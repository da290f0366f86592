#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qcodes/code.hpp"
#include "qcodes/error.hpp"

// Single-error syndrome decoding. The syndrome of a received word is its value
// at the generator's root; an error value e at position l contributes
// e * root^l.
namespace qcodes {

struct ErrorPattern {
  std::size_t position = 0;
  K1Element value;

  friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
};

/// The weight-one error values {+1, -1}.
std::vector<K1Element> default_error_set();

class SyndromeCollisionError : public Error {
 public:
  SyndromeCollisionError(const std::string& message, ErrorPattern first, ErrorPattern second);

  const ErrorPattern& first() const { return first_; }
  const ErrorPattern& second() const { return second_; }

 private:
  ErrorPattern first_;
  ErrorPattern second_;
};

/// Injective map syndrome -> (position, value) over every single error drawn
/// from the error set.
class SyndromeTable {
 public:
  /// Entries are generated value by value, position by position. Throws
  /// SyndromeCollisionError on the first syndrome that repeats or is zero
  /// (for a zero syndrome both reported patterns are the offender).
  static SyndromeTable build(const CodeSpec& code,
                             const std::vector<K1Element>& error_set = default_error_set());

  std::optional<ErrorPattern> lookup(const Residue& syndrome) const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<K1Element>& error_set() const { return error_set_; }

 private:
  std::map<K1Element, ErrorPattern> entries_;
  std::vector<K1Element> error_set_;
};

enum class DecodeStatus { kClean, kCorrected, kUncorrectable };

const char* to_string(DecodeStatus status);

struct DecodeResult {
  Word corrected;
  std::optional<ErrorPattern> error;
  DecodeStatus status = DecodeStatus::kUncorrectable;

  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

/// eval(received, root). Throws kLengthMismatch.
Residue syndrome(const CodeSpec& code, std::span<const Residue> received);

DecodeResult decode(const CodeSpec& code, const SyndromeTable& table,
                    std::span<const Residue> received);

/// root^d for d in [0, 2n). Only for the x^n + 1 family, where root^n = -1
/// splits every single +-1 error into a position and a sign.
class LogTable {
 public:
  /// Throws kInvalidArgument for the x^n - 1 family.
  static LogTable build(const CodeSpec& code);

  std::optional<std::size_t> log(const Residue& x) const;

 private:
  std::map<K1Element, std::size_t> logs_;
};

/// Discrete-log decoder: d < n means +1 at position d, d >= n means -1 at
/// position d - n. Gives the same answer as decode() with the default error
/// set.
DecodeResult dlog_decode(const CodeSpec& code, const LogTable& logs,
                         std::span<const Residue> received);
DecodeResult dlog_decode(const CodeSpec& code, std::span<const Residue> received);

/// Adds `value` at `position`. Throws kLengthMismatch / kInvalidArgument.
Word inject_error(const CodeSpec& code, std::span<const Residue> word, const ErrorPattern& error);

}  // namespace qcodes
