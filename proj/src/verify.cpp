#include "qcodes/verify.hpp"

#include <sstream>

#include "qcodes/decoder.hpp"
#include "qcodes/error.hpp"
#include "qcodes/oracle.hpp"

namespace qcodes {

namespace {

CheckResult single(std::string name, bool ok, std::string note = {}) {
  return {std::move(name), ok ? 1 : 0, 1, std::move(note)};
}

// root^n + sign by repeated multiplication, independent of pow().
bool root_annihilates(const CodeSpecRecord& record, const ModulusRef& modulus) {
  if (record.length < 1 || (record.quotient_sign != 1 && record.quotient_sign != -1)) return false;
  const Residue root = reduce(record.root, modulus);
  Residue acc = one(modulus);
  for (std::int64_t i = 0; i < record.length; ++i) acc = acc * root;
  return (acc + reduce({record.quotient_sign, 0}, modulus)).is_zero();
}

CheckResult reduce_properties(const ModulusRef& modulus, Prng& rng, std::size_t samples) {
  CheckResult check{"reduce properties", 0, static_cast<std::int64_t>(samples), {}};
  const K1Element& m = modulus->element();
  const bool odd = modulus->norm() % 2 == 1;
  auto draw = [&rng](std::int64_t bound) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const K1Element x{draw(1'000'000), draw(1'000'000)};
    const K1Element t{draw(1'000), draw(1'000)};
    const ReductionTrace trace = reduce_traced(x, *modulus);
    const K1Element rep = trace.remainder;
    const bool idempotent = reduce_traced(rep, *modulus).remainder == rep;
    const bool invariant = reduce_traced(x + t * m, *modulus).remainder == rep;
    const bool bounded = !odd || norm(rep) < modulus->norm();
    const bool tie_free = !odd || !trace.tie;
    const bool congruent = oracle::divides(m, x - rep);
    if (idempotent && invariant && bounded && tie_free && congruent) ++check.passed;
  }
  return check;
}

}  // namespace

Residue random_residue(Prng& rng, const ModulusRef& modulus) {
  return from_integer(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus->norm())),
                      modulus);
}

Word random_word(Prng& rng, const ModulusRef& modulus, std::size_t length) {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(random_residue(rng, modulus));
  return out;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

std::string VerificationReport::render() const {
  std::ostringstream os;
  if (!header.empty()) os << header << '\n';
  for (const auto& c : checks) {
    os << c.name << ": " << c.passed << '/' << c.total;
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
  }
  os << "verification: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

CodeSpecRecord example_code_record() {
  return to_record(build_pi2_code({2, 1}, K1Element{1, -1}));
}

VerificationReport run_verification(const CodeSpecRecord& record, const VerifyOptions& options) {
  VerificationReport report;
  report.header = "code file: modulus " + format_element(record.modulus) + ", length " +
                  std::to_string(record.length) + ", root " + format_element(record.root);
  const ModulusRef modulus = make_modulus(provenance_of(record.family));

  const bool modulus_ok = modulus->element() == record.modulus && modulus->norm() == record.ring_norm;
  report.checks.push_back(single("modulus consistency", modulus_ok));
  report.checks.push_back(single("root annihilation", root_annihilates(record, modulus)));
  if (!report.passed()) return report;

  std::optional<CodeSpec> built;
  try {
    built = from_record(record);
    report.checks.push_back(single("code invariants", true));
  } catch (const Error& e) {
    report.checks.push_back(single("code invariants", false, e.what()));
    return report;
  }
  const CodeSpec& code = *built;
  report.header = "code: " + describe(code);
  const std::size_t n = code.length();
  const Residue& root = code.root();

  {
    Poly q = divide_by_linear(n, to_int(code.quotient_sign()), root);
    const bool ok = code.gen_poly() * q == Poly::x_pow_plus(modulus, n, to_int(code.quotient_sign()));
    report.checks.push_back(single("generator division", ok));
  }

  if (code.is_prime_square()) {
    const std::int64_t phi = unit_group_order(*modulus);
    const std::int64_t brute = oracle::brute_order(root);
    const bool half_is_minus_one = pow(root, static_cast<std::uint64_t>(phi / 2)) == -one(modulus);
    report.checks.push_back(single("primitive root certificate", brute == phi && half_is_minus_one,
                                   "brute order " + std::to_string(brute) + ", phi " +
                                       std::to_string(phi)));
    report.checks.push_back(single("order agreement (fast vs brute)", order(root) == brute));
  } else {
    const auto& tp = std::get<TwoPrimesFamily>(code.family());
    const K1Element other = tp.target == 1 ? tp.pi2 : tp.pi1;
    const std::int64_t want = modulus->prime_norms()[tp.target - 1] - 1;
    const std::int64_t brute = oracle::brute_order(root);
    const bool congruent = oracle::divides(other, root.rep() - K1Element::one());
    report.checks.push_back(single("partial generator certificate", brute == want && congruent,
                                   "brute order " + std::to_string(brute) + ", want " +
                                       std::to_string(want)));
    if (modulus->norm() <= 10'000) {
      const Residue fast = find_partial_generator(modulus, static_cast<std::size_t>(tp.target));
      const Residue slow = oracle::brute_search_element(modulus, {want, {other}});
      report.checks.push_back(single("partial generator search agreement", fast == slow));
    }
  }

  if (modulus->norm() <= 10'000) {
    const auto iso = oracle::exhaustive_iso_check(modulus);
    report.checks.push_back({"isomorphism (exhaustive)", iso.pairs - iso.failures, iso.pairs,
                             std::to_string(iso.residues) + " residues"});
  }

  Prng rng(options.seed);
  report.checks.push_back(reduce_properties(modulus, rng, options.reduce_samples));

  std::optional<SyndromeTable> table;
  try {
    table = SyndromeTable::build(code);
    report.checks.push_back(single("syndrome table", true, std::to_string(table->size()) + " entries"));
  } catch (const SyndromeCollisionError& e) {
    report.checks.push_back(single("syndrome table", false, e.what()));
    return report;
  }

  const Matrix g = generator_matrix(code);
  CheckResult agreement{"encoder/matrix agreement", 0, 0, {}};
  CheckResult linearity{"linearity", 0, 0, {}};
  CheckResult closure{"ideal closure (shift)", 0, 0, {}};
  std::vector<Word> messages;
  messages.push_back(Word(n - 1, zero(modulus)));
  for (std::size_t i = 0; i < options.trials; ++i) messages.push_back(random_word(rng, modulus, n - 1));

  for (std::size_t i = 0; i < messages.size(); ++i) {
    const Word c = encode(code, messages[i]);
    ++agreement.total;
    if (c == encode_with_matrix(g, messages[i])) ++agreement.passed;
    ++closure.total;
    if (is_codeword(code, shift(code, c))) ++closure.passed;
    const Word& other = messages[(i + 1) % messages.size()];
    Word sum;
    for (std::size_t j = 0; j + 1 < n; ++j) sum.push_back(messages[i][j] + other[j]);
    const Word lhs = encode(code, sum);
    const Word c2 = encode(code, other);
    Word rhs;
    for (std::size_t j = 0; j < n; ++j) rhs.push_back(c[j] + c2[j]);
    ++linearity.total;
    if (lhs == rhs) ++linearity.passed;
  }
  report.checks.push_back(agreement);
  report.checks.push_back(linearity);
  report.checks.push_back(closure);

  std::optional<LogTable> logs;
  if (code.is_prime_square()) logs = LogTable::build(code);
  CheckResult round_trip{"decode round-trip", 0, 0, {}};
  CheckResult decoders{code.is_prime_square() ? "decoder agreement (table/dlog/reference)"
                                              : "decoder agreement (table/reference)",
                       0, 0, {}};
  for (const auto& m : messages) {
    const Word c = encode(code, m);
    std::vector<std::optional<ErrorPattern>> patterns{std::nullopt};
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& v : default_error_set()) patterns.emplace_back(ErrorPattern{l, v});
    }
    for (const auto& pattern : patterns) {
      const Word received = pattern ? inject_error(code, c, *pattern) : c;
      const DecodeResult result = decode(code, *table, received);
      const DecodeStatus want = pattern ? DecodeStatus::kCorrected : DecodeStatus::kClean;
      ++round_trip.total;
      if (result.status == want && result.corrected == c && result.error == pattern) ++round_trip.passed;
      bool same = oracle::reference_decode(code, received) == result;
      if (logs) same = same && dlog_decode(code, *logs, received) == result;
      ++decoders.total;
      if (same) ++decoders.passed;
    }
  }
  report.checks.push_back(round_trip);
  report.checks.push_back(decoders);
  return report;
}

}  // namespace qcodes
