#pragma once

#include <gmpxx.h>

#include <string>

namespace gchar {

// Reduced numerator/denominator pair with arbitrary precision. mpq_class keeps
// the canonical form (gcd 1, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational r(text, 10);
  r.canonicalize();
  return r;
}

}  // namespace gchar
