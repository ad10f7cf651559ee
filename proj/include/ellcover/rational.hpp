#pragma once

#include <gmpxx.h>

#include <string>

namespace ellcover {

using BigInt = mpz_class;
using Rational = mpq_class;

// "num/den" in lowest terms, or "num" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ellcover
