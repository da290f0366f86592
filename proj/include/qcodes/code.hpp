#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcodes/poly.hpp"
#include "qcodes/residue_ring.hpp"

namespace qcodes {

/// Which ambient ring the code lives in: x^n + 1 or x^n - 1.
enum class QuotientSign : int { kPlus = 1, kMinus = -1 };

inline int to_int(QuotientSign s) { return static_cast<int>(s); }

/// Codes of length phi(p^k)/2 over H(K1)_{pi^k}, ambient x^n + 1.
struct PrimeSquareFamily {
  K1Element pi;
  int power = 2;

  friend bool operator==(const PrimeSquareFamily&, const PrimeSquareFamily&) = default;
};

/// Codes of length phi(p_target) over H(K1)_{pi1 pi2}, ambient x^n - 1.
struct TwoPrimesFamily {
  K1Element pi1;
  K1Element pi2;
  int target = 1;  // 1 or 2

  friend bool operator==(const TwoPrimesFamily&, const TwoPrimesFamily&) = default;
};

using CodeFamily = std::variant<PrimeSquareFamily, TwoPrimesFamily>;

/// Ring modulus a code family is built over.
Provenance provenance_of(const CodeFamily& family);

using Word = std::vector<Residue>;
using Matrix = std::vector<std::vector<Residue>>;

/// Cyclic (or negacyclic) code generated by g(x) = x - root.
class CodeSpec {
 public:
  const ModulusRef& modulus() const { return modulus_; }
  std::size_t length() const { return length_; }
  QuotientSign quotient_sign() const { return sign_; }
  const Residue& root() const { return root_; }
  const Poly& gen_poly() const { return gen_poly_; }
  const CodeFamily& family() const { return family_; }
  bool is_prime_square() const { return std::holds_alternative<PrimeSquareFamily>(family_); }

 private:
  friend CodeSpec make_code_spec(const CodeFamily& family, ModulusRef modulus, std::size_t length,
                                 QuotientSign sign, const Residue& root);

  CodeSpec(CodeFamily family, ModulusRef modulus, std::size_t length, QuotientSign sign,
           Residue root, Poly gen_poly)
      : family_(std::move(family)),
        modulus_(std::move(modulus)),
        length_(length),
        sign_(sign),
        root_(std::move(root)),
        gen_poly_(std::move(gen_poly)) {}

  CodeFamily family_;
  ModulusRef modulus_;
  std::size_t length_;
  QuotientSign sign_;
  Residue root_;
  Poly gen_poly_;
};

/// Assembles a code and checks every CodeSpec invariant: the root annihilates
/// x^n + sign (kRootCheckFailed), x - root divides it, and the length matches
/// the family (kInvalidArgument).
CodeSpec make_code_spec(const CodeFamily& family, ModulusRef modulus, std::size_t length,
                        QuotientSign sign, const Residue& root);

/// x^n + 1 over H(K1)_{pi^power}, n = phi(p^power)/2, root a primitive root
/// (the candidate when given).
CodeSpec build_prime_power_code(const K1Element& pi, int power,
                                const std::optional<K1Element>& root_candidate = std::nullopt);

inline CodeSpec build_pi2_code(const K1Element& pi,
                               const std::optional<K1Element>& root_candidate = std::nullopt) {
  return build_prime_power_code(pi, 2, root_candidate);
}

/// x^n - 1 over H(K1)_{pi1 pi2}, n = phi(p_target), root the partial
/// generator for the target prime.
CodeSpec build_crt_code(const K1Element& pi1, const K1Element& pi2, int target);

/// (n-1) x n matrix whose row i holds the coefficients of x^i g(x).
Matrix generator_matrix(const CodeSpec& code);

/// c(x) = m(x) g(x). The message has n-1 symbols. Throws kLengthMismatch.
Word encode(const CodeSpec& code, std::span<const Residue> message);

/// Row-vector times generator matrix; the same map as encode().
Word encode_with_matrix(const Matrix& g, std::span<const Residue> message);

bool is_codeword(const CodeSpec& code, std::span<const Residue> word);

/// Multiplication by x in the ambient ring: the wrapped symbol is negated
/// for x^n + 1 and kept for x^n - 1.
Word shift(const CodeSpec& code, std::span<const Residue> word);

/// Raw contents of a code file; no invariants are checked here.
struct CodeSpecRecord {
  CodeFamily family;
  K1Element modulus;
  std::int64_t ring_norm = 0;
  std::int64_t length = 0;
  int quotient_sign = 1;
  K1Element root;

  friend bool operator==(const CodeSpecRecord&, const CodeSpecRecord&) = default;
};

CodeSpecRecord to_record(const CodeSpec& code);

/// Rebuilds the modulus from the family, checks the stored modulus and norm
/// against it, then validates the code. Errors: kParse on inconsistent
/// fields, kRootCheckFailed on a bad root.
CodeSpec from_record(const CodeSpecRecord& record);

/// Single-line JSON with fixed field order, followed by a newline.
std::string to_json(const CodeSpecRecord& record);
/// Throws kParse.
CodeSpecRecord parse_code_spec_json(std::string_view text);

std::string describe(const CodeSpec& code);

}  // namespace qcodes
