/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_RATIONAL_HPP
#define CURVECOUNT_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace curvecount {

// Exact rational numbers. GMP keeps the canonical form for us: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. No floating point exists anywhere in this project.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Renders "p" for integers and "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q" with arbitrary-precision parts. Throws std::invalid_argument.
inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

}  // namespace curvecount

#endif
