#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Rational-integer helpers backing the residue ring's integer isomorphism.
namespace qcodes::nt {

/// Least non-negative residue of x mod n (n > 0).
std::int64_t mod(std::int64_t x, std::int64_t n);

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t n);

/// Inverse of x mod n, or nullopt when gcd(x, n) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t x, std::int64_t n);

/// Prime factorization by trial division as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

std::int64_t lcm(std::int64_t x, std::int64_t y);

}  // namespace qcodes::nt
