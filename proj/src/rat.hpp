#pragma once

// Exact arithmetic carriers. Everything in this library computes over the
// rationals; no floating point is used anywhere.

#include <gmpxx.h>
#include <string>

namespace klr {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Fraction constructor that canonicalizes (mpq_class(a, b) requires an
/// already-canonical pair, which silently corrupts state for b < 0).
inline Rat rat_frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) {
  return r.get_str();
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1), b(base);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Int factorial(unsigned n) {
  Int f(1);
  for (unsigned k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

}  // namespace klr
