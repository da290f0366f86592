// Acceptance suite. One line per criterion; nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcodes/code.hpp"
#include "qcodes/decoder.hpp"
#include "qcodes/error.hpp"
#include "qcodes/oracle.hpp"
#include "qcodes/poly.hpp"
#include "qcodes/residue_ring.hpp"
#include "qcodes/verify.hpp"

namespace {

using namespace qcodes;

// Failures are reported as strings; an empty string means the check held.
using Check = std::function<std::string()>;

struct Criterion {
  const char* name;
  double limit_seconds;
  Check check;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

std::string table_reproduction() {
  const std::string got =
      capture(std::string("\"") + QCODES_CLI_PATH + "\" table --pi 2,1 --power 2 --alpha 1,-1w --limit 24");
  const std::string want = slurp(std::filesystem::path(QCODES_FIXTURE_DIR) / "table1.tsv");
  if (want.empty()) return "fixture missing";
  if (got != want) return "output differs from fixture:\n" + got;
  return {};
}

std::string example_factorization() {
  const ModulusRef m = make_modulus(PrimePower{{2, 1}, 2});
  const Residue alpha = reduce({1, -1}, m);
  const Poly q = divide_by_linear(21, +1, alpha);
  if (q.degree() != std::optional<std::size_t>(20)) return "quotient degree is not 20";
  for (std::size_t i = 0; i <= 20; ++i) {
    if (!(q.coeff(i) == pow(alpha, 20 - i))) return "coefficient " + std::to_string(i) + " is not alpha^(20-i)";
  }
  const Poly lin(m, {-alpha, one(m)});
  if (!(lin * q == Poly::x_pow_plus(m, 21, +1))) return "(x - alpha) Q != x^21 + 1";
  return {};
}

std::string primitive_roots() {
  for (std::int64_t p : {7, 13, 19, 31, 37, 43}) {
    const ModulusRef m = make_prime_power_modulus(p, 2);
    const Residue g = find_primitive_root(m);
    const std::int64_t phi = p * (p - 1);
    if (!(pow(g, static_cast<std::uint64_t>(phi / 2)) == -one(m))) return "g^(phi/2) != -1 for p=" + std::to_string(p);
    if (oracle::brute_order(g) != phi) return "brute order != p(p-1) for p=" + std::to_string(p);
  }
  return {};
}

std::string isomorphism() {
  const std::vector<ModulusRef> moduli = {
      make_modulus(PrimePower{{2, 1}, 1}),
      make_modulus(PrimePower{{2, 1}, 2}),
      make_modulus(PrimeProduct{{{2, 1}, {1, 2}}}),
  };
  for (const ModulusRef& m : moduli) {
    const std::int64_t n = m->norm();
    const oracle::IsoReport report = oracle::exhaustive_iso_check(m);
    if (report.residues != n || report.pairs != n * n || !report.ok()) {
      return "isomorphism check failed for N=" + std::to_string(n);
    }
    for (std::int64_t g = 0; g < n; ++g) {
      const Residue r = from_integer(g, m);
      if (to_integer(r) != g || !(from_integer(to_integer(r), m) == r)) {
        return "round trip failed for N=" + std::to_string(n);
      }
    }
  }
  return {};
}

std::string example_decoding() {
  const CodeSpec code = build_pi2_code({2, 1}, K1Element{1, -1});
  const SyndromeTable table = SyndromeTable::build(code);
  const LogTable logs = LogTable::build(code);
  Prng rng(42);
  std::int64_t recovered = 0;
  std::int64_t cases = 0;
  for (int t = 0; t <= 200; ++t) {
    const Word c = t == 0 ? encode(code, Word(code.length() - 1, zero(code.modulus())))
                          : encode(code, random_word(rng, code.modulus(), code.length() - 1));
    std::vector<std::optional<ErrorPattern>> patterns{std::nullopt};
    for (std::size_t pos = 0; pos < code.length(); ++pos) {
      patterns.push_back(ErrorPattern{pos, {1, 0}});
      patterns.push_back(ErrorPattern{pos, {-1, 0}});
    }
    for (const auto& e : patterns) {
      ++cases;
      const Word r = e ? inject_error(code, c, *e) : c;
      const DecodeResult a = decode(code, table, r);
      const DecodeResult b = dlog_decode(code, logs, r);
      const DecodeResult ref = oracle::reference_decode(code, r);
      if (!(a == b) || !(a == ref)) return "decoders disagree";
      if (a.corrected == c && a.error == e) ++recovered;
    }
  }
  if (cases != 8643 || recovered != 8643) {
    return std::to_string(recovered) + "/" + std::to_string(cases) + " recovered";
  }
  return {};
}

std::string crt_code() {
  const CodeSpec code = build_crt_code({2, 1}, {1, 2}, 2);
  const ModulusRef& m = code.modulus();
  if (code.length() != 12) return "length != 12";
  if (!(code.root() == reduce({-4, 1}, m))) return "root != (-4,1)";
  if (!(pow(code.root(), 12) == one(m))) return "e^12 != 1";
  if (oracle::brute_order(code.root()) != 12) return "brute order != 12";
  const Poly lin(m, {-code.root(), one(m)});
  const PolyDivMod dm = divmod(Poly::x_pow_plus(m, 12, -1), lin);
  if (!dm.remainder.is_zero()) return "x^12 - 1 has a nonzero remainder";
  const SyndromeTable table = SyndromeTable::build(code);
  if (table.size() != 24) return "syndrome table size != 24";
  Prng rng(42);
  for (int t = 0; t < 50; ++t) {
    const Word c = encode(code, random_word(rng, m, code.length() - 1));
    std::vector<std::optional<ErrorPattern>> patterns{std::nullopt};
    for (std::size_t pos = 0; pos < code.length(); ++pos) {
      patterns.push_back(ErrorPattern{pos, {1, 0}});
      patterns.push_back(ErrorPattern{pos, {-1, 0}});
    }
    for (const auto& e : patterns) {
      const DecodeResult a = decode(code, table, e ? inject_error(code, c, *e) : c);
      if (!(a.corrected == c) || a.error != e) return "decode failed on trial " + std::to_string(t);
    }
  }
  return {};
}

std::string reduction_properties() {
  const std::vector<ModulusRef> moduli = {
      make_modulus(PrimePower{{2, 1}, 1}),   make_modulus(PrimePower{{2, 1}, 2}),
      make_modulus(PrimePower{{1, 2}, 2}),   make_modulus(PrimeProduct{{{2, 1}, {1, 2}}}),
      make_modulus(PrimePower{{5, 2}, 2}),   make_modulus(PrimePower{{4, 1}, 3}),
  };
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> mult(-50, 50);
  for (const ModulusRef& mp : moduli) {
    const Modulus& m = *mp;
    for (int i = 0; i < 10'000; ++i) {
      const K1Element x{coord(rng), coord(rng)};
      const ReductionTrace t = reduce_traced(x, m);
      if (t.tie) return "tie at N=" + std::to_string(m.norm());
      if (reduce_traced(t.remainder, m).remainder != t.remainder) return "not idempotent";
      if (!(norm(t.remainder) < m.norm())) return "norm not decreased";
      const K1Element shifted = x + K1Element{mult(rng), mult(rng)} * m.element();
      if (reduce_traced(shifted, m).remainder != t.remainder) return "not class invariant";
      if (t.remainder + t.quotient * m.element() != x) return "x != r + q m";
    }
  }
  return {};
}

std::string negative_controls() {
  try {
    make_prime_power_modulus(3, 1);
    return "p=3 accepted";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPartsNotCoprime) return "p=3 rejected with the wrong code";
  }
  const CodeSpec code = build_pi2_code({2, 1}, K1Element{1, -1});
  try {
    SyndromeTable::build(code, {{1, 0}, {2, 0}});
    return "no collision for {+1,+2}";
  } catch (const SyndromeCollisionError& e) {
    const ErrorPattern a{8, {1, 0}};
    const ErrorPattern b{0, {2, 0}};
    if (!((e.first() == a && e.second() == b) || (e.first() == b && e.second() == a))) {
      return std::string("unexpected collision: ") + e.what();
    }
    if (!(pow(code.root(), 8) == reduce({2, 0}, code.modulus()))) return "alpha^8 != 2";
  }
  const SyndromeTable table = SyndromeTable::build(code);
  const Word r(code.length(), reduce({7, 0}, code.modulus()));
  if (decode(code, table, r).status != DecodeStatus::kUncorrectable) return "constant-7 word not uncorrectable";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 table reproduction", 1.0, table_reproduction},
      {"2 example factorization", 1.0, example_factorization},
      {"3 primitive roots mod p^2", 60.0, primitive_roots},
      {"4 exhaustive isomorphism", 10.0, isomorphism},
      {"5 example decoding 8643 cases", 30.0, example_decoding},
      {"6 two-prime code", 10.0, crt_code},
      {"7 reduction properties", 10.0, reduction_properties},
      {"8 negative controls", 1.0, negative_controls},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && elapsed >= c.limit_seconds) problem = "time limit exceeded";
    const bool ok = problem.empty();
    if (!ok) ++failed;
    std::printf("%s  %-32s %8.3fs / %gs%s%s\n", ok ? "PASS" : "FAIL", c.name, elapsed, c.limit_seconds,
                ok ? "" : "  ", problem.c_str());
  }
  std::printf("acceptance: %d/%zu passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
