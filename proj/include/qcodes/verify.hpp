#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcodes/code.hpp"

namespace qcodes {

/// All randomized paths draw from std::mt19937_64 seeded with a single
/// value. Residues are sampled as from_integer(rng() % N); the modulo keeps
/// the stream identical across standard libraries.
using Prng = std::mt19937_64;

Residue random_residue(Prng& rng, const ModulusRef& modulus);
Word random_word(Prng& rng, const ModulusRef& modulus, std::size_t length);

struct VerifyOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::size_t reduce_samples = 10'000;
};

struct CheckResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t total = 0;
  std::string note;

  bool ok() const { return passed == total; }
};

struct VerificationReport {
  std::string header;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// One `name: passed/total` line per check, then `verification: PASS|FAIL`.
  std::string render() const;
};

/// Runs the oracle suite and the module invariants against a code file.
/// A record whose modulus or root is inconsistent yields a failed report,
/// not an exception; a record whose family itself is invalid throws.
VerificationReport run_verification(const CodeSpecRecord& record, const VerifyOptions& options = {});

/// The code of the worked example: pi = 2 + w, root 1 - w, length 21.
CodeSpecRecord example_code_record();

}  // namespace qcodes
