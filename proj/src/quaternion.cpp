#include "qcodes/quaternion.hpp"

#include <charconv>
#include <cmath>

#include "qcodes/checked.hpp"
#include "qcodes/error.hpp"

namespace qcodes {

namespace {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t sum4(std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z) {
  return add(add(w, x), add(y, z));
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw Error(ErrorCode::kParse,
              "cannot parse element '" + std::string(text) + "': " + why);
}

std::int64_t parse_int(std::string_view full, std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(full, "expected an integer");
  }
  return value;
}

// Vector coefficient written as `bw`, `-bw`, `+bw`, or the shorthands `w`,
// `-w`.
std::int64_t parse_w_coefficient(std::string_view full, std::string_view s) {
  s = trim(s);
  if (s.empty() || s.back() != 'w') parse_fail(full, "expected a coefficient ending in 'w'");
  s.remove_suffix(1);
  s = trim(s);
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_int(full, s);
}

K1Element parse_pair(std::string_view full, std::string_view inner) {
  auto comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos) {
    parse_fail(full, "pair form needs exactly one comma");
  }
  std::string_view first = trim(inner.substr(0, comma));
  std::string_view second = trim(inner.substr(comma + 1));
  std::int64_t b = (!second.empty() && second.back() == 'w') ? parse_w_coefficient(full, second)
                                                             : parse_int(full, second);
  return {parse_int(full, first), b};
}

}  // namespace

QuaternionInt hamilton_mul(const QuaternionInt& q, const QuaternionInt& r) {
  return {
      sub(sub(sub(mul(q.a0, r.a0), mul(q.a1, r.a1)), mul(q.a2, r.a2)), mul(q.a3, r.a3)),
      sub(add(add(mul(q.a0, r.a1), mul(q.a1, r.a0)), mul(q.a2, r.a3)), mul(q.a3, r.a2)),
      add(add(sub(mul(q.a0, r.a2), mul(q.a1, r.a3)), mul(q.a2, r.a0)), mul(q.a3, r.a1)),
      add(sub(add(mul(q.a0, r.a3), mul(q.a1, r.a2)), mul(q.a2, r.a1)), mul(q.a3, r.a0)),
  };
}

QuaternionInt conjugate(const QuaternionInt& q) {
  return {q.a0, checked::neg(q.a1), checked::neg(q.a2), checked::neg(q.a3)};
}

std::int64_t norm(const QuaternionInt& q) {
  return sum4(mul(q.a0, q.a0), mul(q.a1, q.a1), mul(q.a2, q.a2), mul(q.a3, q.a3));
}

K1Element operator+(const K1Element& x, const K1Element& y) {
  return {add(x.a, y.a), add(x.b, y.b)};
}

K1Element operator-(const K1Element& x, const K1Element& y) {
  return {sub(x.a, y.a), sub(x.b, y.b)};
}

K1Element operator-(const K1Element& x) { return {checked::neg(x.a), checked::neg(x.b)}; }

K1Element operator*(const K1Element& x, const K1Element& y) {
  return {sub(mul(x.a, y.a), mul(3, mul(x.b, y.b))), add(mul(x.a, y.b), mul(x.b, y.a))};
}

K1Element conjugate(const K1Element& x) { return {x.a, checked::neg(x.b)}; }

std::int64_t norm(const K1Element& x) {
  return add(mul(x.a, x.a), mul(3, mul(x.b, x.b)));
}

QuaternionInt embed(const K1Element& x) { return {x.a, x.b, x.b, x.b}; }

std::int64_t qm_weight(const K1Element& x) {
  return add(checked::abs(x.a), mul(3, checked::abs(x.b)));
}

bool is_rational_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_k1_prime(const K1Element& x) { return is_rational_prime(norm(x)); }

std::optional<K1Element> represent_prime(std::int64_t p) {
  std::optional<K1Element> best;
  for (std::int64_t b = 1; 3 * b * b <= p; ++b) {
    std::int64_t rest = p - 3 * b * b;
    std::int64_t a = isqrt(rest);
    if (a * a == rest && (!best || a < best->a)) best = K1Element{a, b};
  }
  return best;
}

std::string format_element(const K1Element& x) {
  std::string out = std::to_string(x.a);
  if (x.b != 0) {
    if (x.b > 0) out += '+';
    out += std::to_string(x.b);
    out += 'w';
  }
  return out;
}

K1Element parse_element(std::string_view text, bool allow_bare_pair) {
  std::string_view s = trim(text);
  if (s.empty()) parse_fail(text, "empty");
  if (s.front() == '(') {
    if (s.back() != ')') parse_fail(text, "unbalanced parenthesis");
    return parse_pair(text, s.substr(1, s.size() - 2));
  }
  if (s.find(',') != std::string_view::npos) {
    if (!allow_bare_pair) parse_fail(text, "unexpected ','");
    return parse_pair(text, s);
  }
  if (s.back() != 'w') return {parse_int(text, s), 0};
  // Split `a+bw` / `a-bw` at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0, parse_w_coefficient(text, s)};
  return {parse_int(text, s.substr(0, split)), parse_w_coefficient(text, s.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const K1Element& x) { return os << format_element(x); }

std::ostream& operator<<(std::ostream& os, const QuaternionInt& q) {
  return os << q.a0 << (q.a1 < 0 ? "" : "+") << q.a1 << 'i' << (q.a2 < 0 ? "" : "+") << q.a2
            << 'j' << (q.a3 < 0 ? "" : "+") << q.a3 << 'k';
}

}  // namespace qcodes
