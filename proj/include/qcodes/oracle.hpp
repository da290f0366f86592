#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcodes/code.hpp"
#include "qcodes/decoder.hpp"
#include "qcodes/residue_ring.hpp"

// Brute-force reference implementations. They use only K1 arithmetic and
// reduce(): no square-and-multiply, no factorization, no lookup tables.
namespace qcodes::oracle {

/// True iff d divides x in H(K1), i.e. x * conj(d) = 0 componentwise mod N(d).
bool divides(const K1Element& d, const K1Element& x);

/// Least d >= 1 with r^d = 1, by successive multiplication. Throws
/// NotAUnitError if the powers never return to 1.
std::int64_t brute_order(const Residue& r);

struct IsoReport {
  std::int64_t residues = 0;  // distinct classes found by enumeration
  std::int64_t pairs = 0;     // (x, y) pairs checked for + and *
  std::int64_t failures = 0;

  bool ok() const { return failures == 0; }
};

/// Enumerates every class of H(K1)_m from small representatives and checks
/// that to_integer is a bijection onto Z_N, that from_integer inverts it, and
/// that + and * are preserved on all N^2 pairs. Throws kGuardExceeded when
/// N > guard.
IsoReport exhaustive_iso_check(const ModulusRef& modulus, std::int64_t guard = 10'000);

struct ElementPredicate {
  std::int64_t order = 1;
  std::vector<K1Element> congruent_one_mod;
};

/// First integer g = 1, 2, ..., N-1 whose class satisfies the predicate.
/// Throws kNotFound, kGuardExceeded (N > 10^4).
Residue brute_search_element(const ModulusRef& modulus, const ElementPredicate& predicate);

/// Tries the no-error hypothesis and every single error from the error set,
/// keeping those that leave a codeword. Throws kInternalContradiction if more
/// than one hypothesis survives.
DecodeResult reference_decode(const CodeSpec& code, std::span<const Residue> received,
                              const std::vector<K1Element>& error_set = default_error_set());

}  // namespace qcodes::oracle
