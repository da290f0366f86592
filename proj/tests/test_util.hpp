#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcodes/code.hpp"
#include "qcodes/residue_ring.hpp"

namespace qcodes::testing {

inline const K1Element kPi{2, 1};       // norm 7
inline const K1Element kPi13{1, 2};     // norm 13
inline const K1Element kPi19{4, 1};     // norm 19
inline const K1Element kAlpha{1, -1};   // the worked example's root

inline ModulusRef pi_squared() { return make_modulus(PrimePower{kPi, 2}); }
inline ModulusRef pi_product() { return make_modulus(PrimeProduct{{kPi, kPi13}}); }

inline Residue res(std::int64_t a, std::int64_t b, const ModulusRef& m) { return reduce({a, b}, m); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline K1Element random_k1(std::mt19937_64& rng, std::int64_t bound) {
  return {uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
}

// Integer multiplicative order by successive multiplication; 0 for non-units.
inline std::int64_t integer_order(std::int64_t g, std::int64_t n) {
  std::int64_t x = g % n;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (x == 1) return d;
    x = x * g % n;
  }
  return 0;
}

inline const CodeSpec& example_code() {
  static const CodeSpec code = build_pi2_code(kPi, kAlpha);
  return code;
}

inline const CodeSpec& crt_code() {
  static const CodeSpec code = build_crt_code(kPi, kPi13, 2);
  return code;
}

}  // namespace qcodes::testing
