#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

// Exact integer quaternions and the commutative subring H(K1) = Z[w],
// w = i + j + k, w^2 = -3. All arithmetic is overflow-checked.
namespace qcodes {

/// Hamilton integer quaternion a0 + a1 i + a2 j + a3 k.
struct QuaternionInt {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t a3 = 0;

  friend bool operator==(const QuaternionInt&, const QuaternionInt&) = default;
};

QuaternionInt hamilton_mul(const QuaternionInt& q, const QuaternionInt& r);
QuaternionInt conjugate(const QuaternionInt& q);
std::int64_t norm(const QuaternionInt& q);

/// Element a + b(i+j+k) of H(K1). `a` is the complete part, `b` the
/// coefficient of the vector part.
struct K1Element {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr K1Element one() { return {1, 0}; }
  static constexpr K1Element w() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const K1Element&, const K1Element&) = default;
  friend auto operator<=>(const K1Element&, const K1Element&) = default;
};

K1Element operator+(const K1Element& x, const K1Element& y);
K1Element operator-(const K1Element& x, const K1Element& y);
K1Element operator-(const K1Element& x);
/// (a,b)(c,d) = (ac - 3bd, ad + bc).
K1Element operator*(const K1Element& x, const K1Element& y);

K1Element conjugate(const K1Element& x);
/// a^2 + 3b^2.
std::int64_t norm(const K1Element& x);
QuaternionInt embed(const K1Element& x);

/// Quaternion Mannheim weight |a| + 3|b|.
std::int64_t qm_weight(const K1Element& x);

bool is_rational_prime(std::int64_t n);

/// True iff the norm a^2 + 3b^2 is a rational prime.
bool is_k1_prime(const K1Element& x);

/// Solves a^2 + 3b^2 = p with b >= 1, a >= 0, preferring the smallest a.
/// Returns nullopt if p has no such representation.
std::optional<K1Element> represent_prime(std::int64_t p);

/// Canonical text form: `a`, `a+bw`, `a-bw`. The vector coefficient is always
/// written explicitly (`1-1w`), and the complete part is always present
/// (`0+2w`).
std::string format_element(const K1Element& x);

/// Parses `a`, `a+bw`, `a-bw`, `bw` and `(a,b)`. With `allow_bare_pair` the
/// unparenthesised pair forms `a,b` and `a,bw` are accepted too (these clash
/// with the comma-separated polynomial syntax, so polynomial parsing disables
/// them). Throws Error(kParse).
K1Element parse_element(std::string_view text, bool allow_bare_pair = true);

std::ostream& operator<<(std::ostream& os, const K1Element& x);
std::ostream& operator<<(std::ostream& os, const QuaternionInt& q);

}  // namespace qcodes
