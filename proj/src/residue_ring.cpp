#include "qcodes/residue_ring.hpp"

#include <numeric>
#include <string>

#include "qcodes/checked.hpp"
#include "qcodes/error.hpp"
#include "qcodes/number_theory.hpp"

namespace qcodes {

namespace {

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

// Nearest integer to numerator / n (n > 0), ties toward +infinity.
std::int64_t round_div(std::int64_t numerator, std::int64_t n, bool& tie) {
  std::int64_t twice = checked::mul(2, numerator);
  std::int64_t two_n = checked::mul(2, n);
  if (nt::mod(twice, two_n) == n) tie = true;
  return floor_div(checked::add(twice, n), two_n);
}

void require_k1_prime(const K1Element& pi) {
  if (!is_k1_prime(pi)) {
    throw Error(ErrorCode::kNotPrime, format_element(pi) + " has norm " +
                                          std::to_string(norm(pi)) + ", which is not prime");
  }
  if (norm(pi) == 3) {
    throw Error(ErrorCode::kPartsNotCoprime,
                "the prime " + format_element(pi) +
                    " of norm 3 is excluded: its square -3 has non-coprime parts");
  }
}

void require_same_ring(const Residue& x, const Residue& y) {
  if (!(*x.modulus() == *y.modulus())) {
    throw Error(ErrorCode::kModulusMismatch,
                "residues modulo " + format_element(x.modulus()->element()) + " and " +
                    format_element(y.modulus()->element()) + " cannot be combined");
  }
}

}  // namespace

ModulusRef make_modulus(const Provenance& provenance) {
  auto modulus = std::shared_ptr<Modulus>(new Modulus());
  modulus->provenance_ = provenance;

  if (const auto* pp = std::get_if<PrimePower>(&provenance)) {
    if (pp->power < 1) throw Error(ErrorCode::kInvalidArgument, "prime power exponent must be >= 1");
    require_k1_prime(pp->prime);
    K1Element m = K1Element::one();
    for (int i = 0; i < pp->power; ++i) m = m * pp->prime;
    modulus->element_ = m;
    modulus->prime_norms_ = {norm(pp->prime)};
  } else {
    const auto& primes = std::get<PrimeProduct>(provenance).primes;
    if (primes.size() < 2) {
      throw Error(ErrorCode::kInvalidArgument, "a prime product needs at least two primes");
    }
    K1Element m = K1Element::one();
    for (const auto& pi : primes) {
      require_k1_prime(pi);
      std::int64_t p = norm(pi);
      for (std::int64_t q : modulus->prime_norms_) {
        if (q == p) {
          throw Error(ErrorCode::kEqualPrimes,
                      "prime factors must have distinct norms (two of norm " + std::to_string(p) + ")");
        }
      }
      modulus->prime_norms_.push_back(p);
      m = m * pi;
    }
    modulus->element_ = m;
  }

  const K1Element& m = modulus->element_;
  if (std::gcd(m.a, m.b) != 1) {
    throw Error(ErrorCode::kPartsNotCoprime,
                "modulus " + format_element(m) + " has non-coprime parts");
  }
  modulus->norm_ = norm(m);
  const std::int64_t n = modulus->norm_;
  auto b_inverse = nt::inverse_mod(m.b, n);
  if (!b_inverse) {
    throw Error(ErrorCode::kPartsNotCoprime,
                "vector coefficient of " + format_element(m) + " is not invertible mod " +
                    std::to_string(n));
  }
  modulus->v_image_ = nt::mod(-nt::mul_mod(m.a, *b_inverse, n), n);
  const std::int64_t t = modulus->v_image_;
  if (nt::mod(nt::mul_mod(t, t, n) + 3, n) != 0 ||
      nt::mod(m.a + nt::mul_mod(m.b, t, n), n) != 0) {
    throw Error(ErrorCode::kInternalContradiction, "no square root of -3 compatible with the modulus");
  }
  return modulus;
}

ModulusRef make_prime_power_modulus(std::int64_t p, int power) {
  if (!is_rational_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not a rational prime");
  }
  auto pi = represent_prime(p);
  if (!pi) {
    throw Error(ErrorCode::kUnrepresentable, std::to_string(p) + " is not of the form a^2 + 3b^2");
  }
  return make_modulus(PrimePower{*pi, power});
}

bool operator==(const Residue& x, const Residue& y) {
  return *x.modulus_ == *y.modulus_ && x.rep_ == y.rep_;
}

Residue operator+(const Residue& x, const Residue& y) {
  require_same_ring(x, y);
  return reduce(x.rep_ + y.rep_, x.modulus_);
}

Residue operator-(const Residue& x, const Residue& y) {
  require_same_ring(x, y);
  return reduce(x.rep_ - y.rep_, x.modulus_);
}

Residue operator*(const Residue& x, const Residue& y) {
  require_same_ring(x, y);
  return reduce(x.rep_ * y.rep_, x.modulus_);
}

Residue operator-(const Residue& x) { return reduce(-x.rep_, x.modulus_); }

ReductionTrace reduce_traced(const K1Element& x, const Modulus& modulus) {
  const K1Element& m = modulus.element();
  const K1Element numerator = x * conjugate(m);
  ReductionTrace trace;
  trace.quotient = {round_div(numerator.a, modulus.norm(), trace.tie),
                    round_div(numerator.b, modulus.norm(), trace.tie)};
  trace.remainder = x - trace.quotient * m;
  return trace;
}

Residue reduce(const K1Element& x, const ModulusRef& modulus) {
  ReductionTrace trace = reduce_traced(x, *modulus);
  if (trace.tie && modulus->norm() % 2 == 1) {
    throw Error(ErrorCode::kInternalContradiction,
                "rounding tie while reducing " + format_element(x) + " modulo an odd norm");
  }
  return Residue(trace.remainder, modulus);
}

Residue zero(const ModulusRef& modulus) { return reduce({0, 0}, modulus); }

Residue one(const ModulusRef& modulus) { return reduce(K1Element::one(), modulus); }

std::int64_t to_integer(const Residue& r) {
  const Modulus& m = *r.modulus();
  return nt::mod(r.rep().a + nt::mul_mod(r.rep().b, m.v_image(), m.norm()), m.norm());
}

Residue from_integer(std::int64_t g, const ModulusRef& modulus) {
  return reduce({nt::mod(g, modulus->norm()), 0}, modulus);
}

bool is_unit(const Residue& r) { return std::gcd(to_integer(r), r.modulus()->norm()) == 1; }

Residue inverse(const Residue& r) {
  const std::int64_t n = r.modulus()->norm();
  const std::int64_t value = to_integer(r);
  auto inv = nt::inverse_mod(value, n);
  if (!inv) {
    std::int64_t g = std::gcd(value, n);
    throw NotAUnitError(format_element(r.rep()) + " is not a unit: gcd(" + std::to_string(value) +
                            ", " + std::to_string(n) + ") = " + std::to_string(g),
                        g);
  }
  return from_integer(*inv, r.modulus());
}

Residue pow(const Residue& r, std::uint64_t exponent) {
  Residue result = one(r.modulus());
  Residue base = r;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

std::int64_t order(const Residue& r) {
  if (!is_unit(r)) inverse(r);  // throws with the gcd witness
  const Residue unit = one(r.modulus());
  std::int64_t d = unit_group_order(*r.modulus());
  for (auto [q, e] : nt::factorize(d)) {
    while (d % q == 0 && pow(r, static_cast<std::uint64_t>(d / q)) == unit) d /= q;
  }
  return d;
}

std::int64_t euler_phi(std::int64_t n) { return nt::euler_phi(n); }

std::int64_t unit_group_order(const Modulus& modulus) { return nt::euler_phi(modulus.norm()); }

Residue find_primitive_root(const ModulusRef& modulus, const std::optional<Residue>& candidate) {
  if (!modulus->is_prime_power()) {
    throw Error(ErrorCode::kInvalidArgument, "primitive roots are searched only modulo prime powers");
  }
  const std::int64_t phi = unit_group_order(*modulus);
  const Residue minus_one = -one(modulus);

  auto certified = [&](const Residue& g) {
    if (!(pow(g, static_cast<std::uint64_t>(phi / 2)) == minus_one)) {
      throw Error(ErrorCode::kInternalContradiction,
                  "primitive root " + format_element(g.rep()) + " fails g^(phi/2) = -1");
    }
    return g;
  };

  if (candidate) {
    if (!(*candidate->modulus() == *modulus)) {
      throw Error(ErrorCode::kModulusMismatch, "candidate lives in a different ring");
    }
    if (!is_unit(*candidate)) {
      throw Error(ErrorCode::kCandidateNotPrimitive,
                  format_element(candidate->rep()) + " is not a unit modulo " +
                      format_element(modulus->element()));
    }
    std::int64_t d = order(*candidate);
    if (d != phi) {
      throw Error(ErrorCode::kCandidateNotPrimitive,
                  format_element(candidate->rep()) + " has order " + std::to_string(d) +
                      ", not " + std::to_string(phi));
    }
    return certified(*candidate);
  }

  for (std::int64_t g = 2; g < modulus->norm(); ++g) {
    Residue r = from_integer(g, modulus);
    if (is_unit(r) && order(r) == phi) return certified(r);
  }
  throw Error(ErrorCode::kNotFound, "no primitive root modulo " + format_element(modulus->element()));
}

Residue find_partial_generator(const ModulusRef& modulus, std::size_t target) {
  const auto& norms = modulus->prime_norms();
  if (modulus->is_prime_power()) {
    throw Error(ErrorCode::kInvalidArgument, "partial generators need a product of distinct primes");
  }
  if (target < 1 || target > norms.size()) {
    throw Error(ErrorCode::kInvalidArgument, "target prime index " + std::to_string(target) +
                                                 " out of range 1.." + std::to_string(norms.size()));
  }
  const std::int64_t wanted = norms[target - 1] - 1;
  for (std::int64_t g = 1; g < modulus->norm(); ++g) {
    bool congruent = true;
    for (std::size_t j = 0; j < norms.size() && congruent; ++j) {
      if (j + 1 != target && nt::mod(g, norms[j]) != 1) congruent = false;
    }
    if (!congruent) continue;
    Residue r = from_integer(g, modulus);
    if (is_unit(r) && order(r) == wanted) return r;
  }
  throw Error(ErrorCode::kNotFound, "no partial generator for prime index " + std::to_string(target));
}

std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.rep(); }

}  // namespace qcodes
