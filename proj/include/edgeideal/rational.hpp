// Exact rational coefficients, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace edgeideal {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p" or "p/q", canonical (lowest terms, q > 0).
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p" or "p/q" with q != 0; canonicalizes.
inline Rational rational_from_string(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("invalid rational literal: " + s);
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace edgeideal
