#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcodes/residue_ring.hpp"

namespace qcodes {

/// Dense polynomial over H(K1)_m. Coefficients are stored constant term first
/// with trailing zeros trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(ModulusRef modulus);
  Poly(ModulusRef modulus, std::vector<Residue> coeffs);

  static Poly from_elements(const ModulusRef& modulus, std::span<const K1Element> coeffs);
  static Poly monomial(const Residue& coeff, std::size_t degree);
  /// x^n + sign, sign in {+1, -1}.
  static Poly x_pow_plus(const ModulusRef& modulus, std::size_t n, int sign);

  const ModulusRef& modulus() const { return modulus_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Residue coeff(std::size_t i) const;
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficients padded with zeros to exactly `length` entries. Throws
  /// kLengthMismatch if the polynomial does not fit.
  std::vector<Residue> to_vector(std::size_t length) const;

  friend bool operator==(const Poly& p, const Poly& q);

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Residue& c, const Poly& p);
  friend Poly operator-(const Poly& p);

 private:
  void trim();

  ModulusRef modulus_;
  std::vector<Residue> coeffs_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Long division by a polynomial with unit leading coefficient.
/// Errors: kDivisionByZeroPoly, kNonUnitLeadingCoefficient, kModulusMismatch.
PolyDivMod divmod(const Poly& dividend, const Poly& divisor);

/// Synthetic division of x^n + sign by (x - root). Returns Q with
/// (x - root) Q = x^n + sign. Throws kRootCheckFailed unless root^n = -sign.
Poly divide_by_linear(std::size_t n, int sign, const Residue& root);

/// Horner evaluation.
Residue eval(const Poly& p, const Residue& at);
Residue eval(std::span<const Residue> coeffs, const Residue& at);

/// Comma-separated coefficients, constant term first, e.g. `-1+1w,1`.
std::string format_poly(std::span<const Residue> coeffs);
std::vector<K1Element> parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace qcodes
