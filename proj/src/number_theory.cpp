#include "qcodes/number_theory.hpp"

#include <numeric>
#include <tuple>

#include "qcodes/checked.hpp"

namespace qcodes::nt {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t n) {
  __extension__ using Wide = __int128;
  auto wide = static_cast<Wide>(mod(x, n)) * mod(y, n);
  return static_cast<std::int64_t>(wide % n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t n) {
  std::int64_t result = 1 % n;
  base = mod(base, n);
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exponent >>= 1U;
  }
  return result;
}

std::optional<std::int64_t> inverse_mod(std::int64_t x, std::int64_t n) {
  std::int64_t old_r = mod(x, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, n);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> factors;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::int64_t lcm(std::int64_t x, std::int64_t y) {
  return checked::mul(x / std::gcd(x, y), y);
}

}  // namespace qcodes::nt
