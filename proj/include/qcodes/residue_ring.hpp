#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "qcodes/quaternion.hpp"

// The finite rings H(K1)_m = H(K1) / <m> for m = pi^k or m = pi_1 pi_2.
//
// Whenever gcd(a_m, b_m) = 1 the map a + b w -> a + b t (mod N), with
// N = a_m^2 + 3 b_m^2 and t a root of a_m + b_m t = 0 (mod N), is a ring
// isomorphism onto Z_N. Unit tests, inverses and orders go through it; H(K1)
// itself is not Euclidean, so there is no ring-side gcd here.
namespace qcodes {

/// m = prime^power.
struct PrimePower {
  K1Element prime;
  int power = 1;
};

/// m = product of distinct primes (distinct norms). Two factors is the
/// supported construction; three or more is experimental.
struct PrimeProduct {
  std::vector<K1Element> primes;
};

using Provenance = std::variant<PrimePower, PrimeProduct>;

class Modulus;
using ModulusRef = std::shared_ptr<const Modulus>;

class Modulus {
 public:
  const K1Element& element() const { return element_; }
  std::int64_t norm() const { return norm_; }
  /// t in [0, N) with a_m + b_m t = 0 and t^2 + 3 = 0 (mod N).
  std::int64_t v_image() const { return v_image_; }
  const Provenance& provenance() const { return provenance_; }
  bool is_prime_power() const { return std::holds_alternative<PrimePower>(provenance_); }
  /// Norms of the prime factors in provenance order (one entry for a prime
  /// power).
  const std::vector<std::int64_t>& prime_norms() const { return prime_norms_; }

  friend bool operator==(const Modulus& x, const Modulus& y) { return x.element_ == y.element_; }

 private:
  friend ModulusRef make_modulus(const Provenance& provenance);

  Modulus() = default;

  K1Element element_;
  std::int64_t norm_ = 0;
  std::int64_t v_image_ = 0;
  Provenance provenance_;
  std::vector<std::int64_t> prime_norms_;
};

/// Validates the provenance and builds the ring modulus.
/// Errors: kNotPrime, kPartsNotCoprime (includes every modulus over the
/// prime of norm 3), kEqualPrimes, kInvalidArgument.
ModulusRef make_modulus(const Provenance& provenance);

/// Modulus pi^power for the canonical pi = represent_prime(p).
/// Errors: kNotPrime, kUnrepresentable, plus those of make_modulus.
ModulusRef make_prime_power_modulus(std::int64_t p, int power);

/// A residue class, stored as its canonical representative.
class Residue {
 public:
  const K1Element& rep() const { return rep_; }
  const ModulusRef& modulus() const { return modulus_; }
  bool is_zero() const { return rep_.is_zero(); }

  /// Equal iff same ring and same class. Residues of different rings compare
  /// unequal.
  friend bool operator==(const Residue& x, const Residue& y);

  friend Residue operator+(const Residue& x, const Residue& y);
  friend Residue operator-(const Residue& x, const Residue& y);
  friend Residue operator*(const Residue& x, const Residue& y);
  friend Residue operator-(const Residue& x);

 private:
  friend Residue reduce(const K1Element& x, const ModulusRef& modulus);

  Residue(K1Element rep, ModulusRef modulus) : rep_(rep), modulus_(std::move(modulus)) {}

  K1Element rep_;
  ModulusRef modulus_;
};

struct ReductionTrace {
  K1Element remainder;
  K1Element quotient;
  /// Some component of x * conj(m) / N was exactly halfway between integers.
  bool tie = false;
};

/// Rounded division: x - round(x * conj(m) / N) * m, rounding each component
/// to the nearest integer (ties toward +infinity). Ties cannot occur for odd N.
ReductionTrace reduce_traced(const K1Element& x, const Modulus& modulus);

/// Canonical representative of x mod m. Throws kInternalContradiction if a
/// rounding tie shows up for odd N.
Residue reduce(const K1Element& x, const ModulusRef& modulus);

Residue zero(const ModulusRef& modulus);
Residue one(const ModulusRef& modulus);

/// Image of the residue in Z_N, in [0, N).
std::int64_t to_integer(const Residue& r);
Residue from_integer(std::int64_t g, const ModulusRef& modulus);

bool is_unit(const Residue& r);
/// Throws NotAUnitError.
Residue inverse(const Residue& r);
Residue pow(const Residue& r, std::uint64_t exponent);
/// Multiplicative order, found by stripping prime factors from phi(N).
/// Throws NotAUnitError.
std::int64_t order(const Residue& r);

std::int64_t euler_phi(std::int64_t n);
std::int64_t unit_group_order(const Modulus& modulus);

/// Generator of the cyclic group H(K1)*_{pi^k}. With a candidate, validates it
/// (kCandidateNotPrimitive on failure); otherwise scans g = 2, 3, 4, ... and
/// returns from_integer of the first primitive root. In both cases
/// g^{phi(N)/2} = -1 is verified before returning.
Residue find_primitive_root(const ModulusRef& modulus,
                            const std::optional<Residue>& candidate = std::nullopt);

/// For m = pi_1 pi_2 (...), the least integer g = 1, 2, ... such that
/// g = 1 (mod pi_j) for every j != target and g has order exactly
/// phi(p_target). `target` is 1-based.
Residue find_partial_generator(const ModulusRef& modulus, std::size_t target);

std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace qcodes
