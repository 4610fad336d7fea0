/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_JET_HPP
#define CURVECOUNT_JET_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "surface.hpp"  // ParseError

namespace curvecount {

struct NoDistinguishedDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SingularityLabel {
  A0, A1, A2, A3, A4, A5, A6, A7, AtLeastA8,
  D4, D5, D6, D7, AtLeastD8,
  E6, E7, E8,
  X9,
  BeyondScope,
};
const std::string& label_name(SingularityLabel l);

// Truncated bivariate polynomial germ at the origin with exact rational
// coefficients. Stored as monomial coefficients c_ij of x^i y^j, so the partial
// derivative f_ij = d^{i+j} f / dx^i dy^j at 0 equals c_ij * i! * j!.
class Jet {
 public:
  explicit Jet(int truncation_order = 8);

  // Grammar: sums of terms c*x^i*y^j with integer or rational c; '*' optional,
  // whitespace ignored. Examples: "x^4+y^4", "y^2 + x^3", "1/2*x*y - 3".
  static Jet parse(const std::string& text);

  int truncation_order() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }

  void set_coeff(int i, int j, const Rational& c);  // drops monomials beyond truncation
  Rational coeff(int i, int j) const;               // 0 when absent
  Rational derivative(int i, int j) const;          // f_ij

  // f(a*x + b*y, c*x + d*y), truncated at the same order.
  Jet linear_substitute(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) const;
  Jet scaled(const Rational& c) const;

  std::string to_string() const;

 private:
  int trunc_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

// Invertible rational change of frame sending the distinguished direction w to
// the first coordinate axis (the stored matrix applies to coordinates; its
// columns express the old coordinates of the new basis vectors' preimages).
struct AdaptedFrame {
  // Row-major 2x2 matrix M with M*w proportional to e1; det != 0.
  std::array<Rational, 4> m;
};

// Moves the distinguished direction to the first axis. In the A-branch (Hessian
// of rank 1) the result has f_20 = f_11 = 0 and f_02 != 0; in the D/E-branch
// (Hessian zero, cubic with a repeated root) it has f_30 = f_21 = 0.
// Throws NoDistinguishedDirection when the Hessian is non-degenerate or the
// cubic has distinct roots or vanishes identically.
std::pair<AdaptedFrame, Jet> adapt_frame(const Jet& jet);

// Directional quantities of an adapted jet (A-branch): values A_3 .. A_kmax,
// kmax <= 8. Requires f_02 != 0.
std::vector<Rational> a_quantities(const Jet& adapted, int kmax);

// D-branch quantities D_6 .. D_kmax, kmax <= 8. Requires f_12 != 0.
std::vector<Rational> d_quantities(const Jet& adapted, int kmax);

// Full decision tree over the criteria lemmas. Requires truncation order >= 8.
SingularityLabel classify_origin(const Jet& jet);

// Binary form helpers, exposed for the classifier's tests. Coefficient vector
// a[i] multiplies x^i y^(n-i).
struct BinaryForm {
  int n;
  std::vector<Rational> a;
};
bool binary_form_is_zero(const BinaryForm& f);
bool binary_form_has_repeated_root(const BinaryForm& f);  // projective, over C
// The unique repeated direction of a cubic with discriminant zero. The double
// root of a rational cubic is always rational (its conjugate would otherwise be
// a second double root, impossible in degree 3).
std::optional<std::pair<Rational, Rational>> cubic_repeated_direction(const BinaryForm& f);

}  // namespace curvecount

#endif
