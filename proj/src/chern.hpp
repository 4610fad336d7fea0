/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_CHERN_HPP
#define CURVECOUNT_CHERN_HPP

#include <compare>
#include <map>
#include <string>

#include "rational.hpp"

namespace curvecount {

struct Surface;

// Monomial in the four degree-2 intersection generators:
//   D  = c1(L)^2,  K = c1(L).c1(T*X),  S = c1(T*X)^2,  X2 = c2(T*X).
// Every count the engine produces lives in the polynomial ring over these four.
struct ChernMonomial {
  int d = 0;   // power of D
  int k = 0;   // power of K
  int s = 0;   // power of S
  int x2 = 0;  // power of X2

  int total_degree() const { return d + k + s + x2; }
  auto operator<=>(const ChernMonomial&) const = default;
  std::string to_string() const;  // "D^2*K", "1" for the unit monomial
};

// Sparse polynomial with exact rational coefficients; canonical form holds at all
// times (no explicit zero coefficients, terms keyed in a fixed monomial order).
class ChernPolynomial {
 public:
  ChernPolynomial() = default;
  static ChernPolynomial zero() { return {}; }
  static ChernPolynomial constant(const Rational& c);
  static ChernPolynomial monomial(const ChernMonomial& m, const Rational& c = Rational(1));

  // The four generators.
  static ChernPolynomial D() { return monomial({1, 0, 0, 0}); }
  static ChernPolynomial K() { return monomial({0, 1, 0, 0}); }
  static ChernPolynomial S() { return monomial({0, 0, 1, 0}); }
  static ChernPolynomial X2() { return monomial({0, 0, 0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int total_degree() const;  // max term degree, -1 for the zero polynomial
  const std::map<ChernMonomial, Rational>& terms() const { return terms_; }

  void add_term(const ChernMonomial& m, const Rational& c);

  ChernPolynomial& operator+=(const ChernPolynomial& o);
  ChernPolynomial& operator-=(const ChernPolynomial& o);
  ChernPolynomial& operator*=(const Rational& c);
  friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
  friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
  friend ChernPolynomial operator*(ChernPolynomial a, const Rational& c) { return a *= c; }
  friend ChernPolynomial operator*(const Rational& c, ChernPolynomial a) { return a *= c; }
  friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b);
  friend ChernPolynomial operator-(const ChernPolynomial& a);
  bool operator==(const ChernPolynomial& o) const = default;

  // Exact substitution of a surface's four intersection numbers.
  Rational eval(const Surface& s) const;

  // Canonical text: terms in descending lexicographic order on (d, k, s, x2),
  // e.g. "3*D + 2*K + X2"; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  std::map<ChernMonomial, Rational> terms_;
};

}  // namespace curvecount

#endif
