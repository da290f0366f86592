#include "qcodes/decoder.hpp"

#include <string>

#include "qcodes/error.hpp"

namespace qcodes {

namespace {

std::string describe(const ErrorPattern& e) {
  return format_element(e.value) + " @ " + std::to_string(e.position);
}

DecodeResult uncorrectable(std::span<const Residue> received) {
  return {Word(received.begin(), received.end()), std::nullopt, DecodeStatus::kUncorrectable};
}

// Subtracts the located error and confirms the result is a codeword.
DecodeResult correct(const CodeSpec& code, std::span<const Residue> received,
                     const ErrorPattern& error) {
  Word fixed(received.begin(), received.end());
  fixed[error.position] = fixed[error.position] - reduce(error.value, code.modulus());
  if (!is_codeword(code, fixed)) {
    throw Error(ErrorCode::kInternalContradiction, "correction " + describe(error) +
                                                       " did not produce a codeword");
  }
  return {std::move(fixed), error, DecodeStatus::kCorrected};
}

}  // namespace

std::vector<K1Element> default_error_set() { return {{1, 0}, {-1, 0}}; }

SyndromeCollisionError::SyndromeCollisionError(const std::string& message, ErrorPattern first,
                                               ErrorPattern second)
    : Error(ErrorCode::kSyndromeCollision, message), first_(first), second_(second) {}

SyndromeTable SyndromeTable::build(const CodeSpec& code, const std::vector<K1Element>& error_set) {
  SyndromeTable table;
  table.error_set_ = error_set;
  const ModulusRef& m = code.modulus();
  for (const auto& value : error_set) {
    const Residue e = reduce(value, m);
    if (e.is_zero()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "error value " + format_element(value) + " is zero in the ring");
    }
    Residue root_power = one(m);
    for (std::size_t l = 0; l < code.length(); ++l, root_power = root_power * code.root()) {
      const ErrorPattern pattern{l, value};
      const Residue s = e * root_power;
      if (s.is_zero()) {
        throw SyndromeCollisionError("error " + describe(pattern) + " has zero syndrome", pattern,
                                     pattern);
      }
      auto [it, inserted] = table.entries_.emplace(s.rep(), pattern);
      if (!inserted) {
        throw SyndromeCollisionError("errors " + describe(it->second) + " and " + describe(pattern) +
                                         " share syndrome " + format_element(s.rep()),
                                     it->second, pattern);
      }
    }
  }
  return table;
}

std::optional<ErrorPattern> SyndromeTable::lookup(const Residue& syndrome) const {
  auto it = entries_.find(syndrome.rep());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const char* to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kClean: return "clean";
    case DecodeStatus::kCorrected: return "corrected";
    case DecodeStatus::kUncorrectable: return "uncorrectable";
  }
  return "unknown";
}

Residue syndrome(const CodeSpec& code, std::span<const Residue> received) {
  if (received.size() != code.length()) {
    throw Error(ErrorCode::kLengthMismatch, "received word has length " +
                                                std::to_string(received.size()) + ", expected " +
                                                std::to_string(code.length()));
  }
  return eval(received, code.root());
}

DecodeResult decode(const CodeSpec& code, const SyndromeTable& table,
                    std::span<const Residue> received) {
  const Residue s = syndrome(code, received);
  if (s.is_zero()) return {Word(received.begin(), received.end()), std::nullopt, DecodeStatus::kClean};
  auto error = table.lookup(s);
  if (!error) return uncorrectable(received);
  return correct(code, received, *error);
}

LogTable LogTable::build(const CodeSpec& code) {
  if (code.quotient_sign() != QuotientSign::kPlus) {
    throw Error(ErrorCode::kInvalidArgument, "the discrete-log decoder needs root^n = -1");
  }
  LogTable table;
  Residue power = one(code.modulus());
  for (std::size_t d = 0; d < 2 * code.length(); ++d, power = power * code.root()) {
    table.logs_.emplace(power.rep(), d);
  }
  return table;
}

std::optional<std::size_t> LogTable::log(const Residue& x) const {
  auto it = logs_.find(x.rep());
  if (it == logs_.end()) return std::nullopt;
  return it->second;
}

DecodeResult dlog_decode(const CodeSpec& code, const LogTable& logs,
                         std::span<const Residue> received) {
  const Residue s = syndrome(code, received);
  if (s.is_zero()) return {Word(received.begin(), received.end()), std::nullopt, DecodeStatus::kClean};
  auto d = logs.log(s);
  if (!d) return uncorrectable(received);
  const std::size_t n = code.length();
  ErrorPattern error = *d < n ? ErrorPattern{*d, {1, 0}} : ErrorPattern{*d - n, {-1, 0}};
  return correct(code, received, error);
}

DecodeResult dlog_decode(const CodeSpec& code, std::span<const Residue> received) {
  return dlog_decode(code, LogTable::build(code), received);
}

Word inject_error(const CodeSpec& code, std::span<const Residue> word, const ErrorPattern& error) {
  if (word.size() != code.length()) {
    throw Error(ErrorCode::kLengthMismatch, "word has length " + std::to_string(word.size()) +
                                                ", expected " + std::to_string(code.length()));
  }
  if (error.position >= code.length()) {
    throw Error(ErrorCode::kInvalidArgument, "error position " + std::to_string(error.position) +
                                                 " out of range");
  }
  Word out(word.begin(), word.end());
  out[error.position] = out[error.position] + reduce(error.value, code.modulus());
  return out;
}

}  // namespace qcodes
