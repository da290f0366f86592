#include "qcodes/oracle.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "qcodes/error.hpp"

namespace qcodes::oracle {

namespace {

Residue mul(const Residue& x, const Residue& y) { return reduce(x.rep() * y.rep(), x.modulus()); }

Residue add(const Residue& x, const Residue& y) { return reduce(x.rep() + y.rep(), x.modulus()); }

std::optional<std::int64_t> order_if_unit(const Residue& r) {
  const ModulusRef& m = r.modulus();
  const K1Element unit = K1Element::one();
  Residue x = r;
  for (std::int64_t d = 1; d <= m->norm(); ++d, x = mul(x, r)) {
    if (reduce(x.rep() - unit, m).is_zero()) return d;
  }
  return std::nullopt;
}

bool is_codeword_by_horner(const CodeSpec& code, std::span<const Residue> word) {
  Residue acc = reduce({0, 0}, code.modulus());
  for (std::size_t i = word.size(); i-- > 0;) acc = add(mul(acc, code.root()), word[i]);
  return acc.is_zero();
}

void guard_norm(const Modulus& m, std::int64_t guard) {
  if (m.norm() > guard) {
    throw Error(ErrorCode::kGuardExceeded, "brute force refused: N = " + std::to_string(m.norm()) +
                                               " exceeds " + std::to_string(guard));
  }
}

}  // namespace

bool divides(const K1Element& d, const K1Element& x) {
  const std::int64_t n = norm(d);
  if (n == 0) return x.is_zero();
  const K1Element scaled = x * conjugate(d);
  return scaled.a % n == 0 && scaled.b % n == 0;
}

std::int64_t brute_order(const Residue& r) {
  if (auto d = order_if_unit(r)) return *d;
  const std::int64_t g = std::gcd(to_integer(r), r.modulus()->norm());
  throw NotAUnitError(format_element(r.rep()) + " is not a unit", g);
}

IsoReport exhaustive_iso_check(const ModulusRef& modulus, std::int64_t guard) {
  guard_norm(*modulus, guard);
  const std::int64_t n = modulus->norm();

  // Every class has a representative of norm below N, so this box covers
  // them all.
  std::set<K1Element> reps;
  for (std::int64_t b = 0; 3 * b * b <= n; ++b) {
    for (std::int64_t a = 0; a * a <= n; ++a) {
      for (K1Element x : {K1Element{a, b}, K1Element{-a, b}, K1Element{a, -b}, K1Element{-a, -b}}) {
        reps.insert(reduce(x, modulus).rep());
      }
    }
  }

  IsoReport report;
  std::vector<Residue> residues;
  std::vector<std::int64_t> images;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& rep : reps) {
    Residue r = reduce(rep, modulus);
    const std::int64_t image = to_integer(r);
    if (image < 0 || image >= n || hit[static_cast<std::size_t>(image)]) ++report.failures;
    else hit[static_cast<std::size_t>(image)] = true;
    if (!(from_integer(image, modulus) == r)) ++report.failures;
    residues.push_back(r);
    images.push_back(image);
  }
  report.residues = static_cast<std::int64_t>(residues.size());
  if (report.residues != n) ++report.failures;

  for (std::size_t i = 0; i < residues.size(); ++i) {
    for (std::size_t j = 0; j < residues.size(); ++j) {
      ++report.pairs;
      const bool sum_ok = to_integer(add(residues[i], residues[j])) == (images[i] + images[j]) % n;
      const bool prod_ok = to_integer(mul(residues[i], residues[j])) == (images[i] * images[j]) % n;
      if (!sum_ok || !prod_ok) ++report.failures;
    }
  }
  return report;
}

Residue brute_search_element(const ModulusRef& modulus, const ElementPredicate& predicate) {
  guard_norm(*modulus, 10'000);
  for (std::int64_t g = 1; g < modulus->norm(); ++g) {
    Residue x = reduce({g, 0}, modulus);
    bool congruent = true;
    for (const auto& pi : predicate.congruent_one_mod) {
      if (!divides(pi, x.rep() - K1Element::one())) congruent = false;
    }
    if (!congruent) continue;
    auto d = order_if_unit(x);
    if (d && *d == predicate.order) return x;
  }
  throw Error(ErrorCode::kNotFound, "no element of order " + std::to_string(predicate.order) +
                                        " satisfies the congruences");
}

DecodeResult reference_decode(const CodeSpec& code, std::span<const Residue> received,
                              const std::vector<K1Element>& error_set) {
  if (received.size() != code.length()) {
    throw Error(ErrorCode::kLengthMismatch, "received word has length " +
                                                std::to_string(received.size()) + ", expected " +
                                                std::to_string(code.length()));
  }
  std::vector<DecodeResult> survivors;
  Word word(received.begin(), received.end());
  if (is_codeword_by_horner(code, word)) {
    survivors.push_back({word, std::nullopt, DecodeStatus::kClean});
  }
  for (const auto& value : error_set) {
    const Residue e = reduce(value, code.modulus());
    for (std::size_t l = 0; l < code.length(); ++l) {
      Word candidate = word;
      candidate[l] = reduce(candidate[l].rep() - e.rep(), code.modulus());
      if (is_codeword_by_horner(code, candidate)) {
        survivors.push_back({std::move(candidate), ErrorPattern{l, value}, DecodeStatus::kCorrected});
      }
    }
  }
  if (survivors.size() > 1) {
    throw Error(ErrorCode::kInternalContradiction,
                std::to_string(survivors.size()) + " error hypotheses explain the received word");
  }
  if (survivors.empty()) return {word, std::nullopt, DecodeStatus::kUncorrectable};
  return survivors.front();
}

}  // namespace qcodes::oracle
