#pragma once

#include <cstdint>

#include "qcodes/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Every operation throws
// Error(kOverflow) instead of wrapping.
namespace qcodes::checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw_overflow("addition");
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw_overflow("subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw_overflow("multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

inline std::int64_t abs(std::int64_t x) { return x < 0 ? neg(x) : x; }

}  // namespace qcodes::checked
