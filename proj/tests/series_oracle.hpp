/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Independent oracle for the directional quantities: eliminate y along the
// critical branch f_y(x, y(x)) = 0 by power series and read the Taylor
// coefficients of g(x) = f(x, y(x)). For an adapted A-branch jet
// (f20 = f11 = 0, f02 != 0) this gives A_k = k! * g_k; for an adapted D-branch
// jet (Hessian 0, f30 = f21 = 0, f12 != 0) it gives D_k = (k-2)! * g_{k-2}.
// Lives in test code only; independent of the closed formulas it checks.
#ifndef CURVECOUNT_TESTS_SERIES_ORACLE_HPP
#define CURVECOUNT_TESTS_SERIES_ORACLE_HPP

#include <vector>

#include "jet.hpp"

namespace curvecount::testing {

using Series = std::vector<Rational>;  // index = power of x

inline Series series_mul(const Series& a, const Series& b, size_t order) {
  Series r(order + 1, Rational(0));
  for (size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Evaluates the jet at (x, y(x)) as a truncated series.
inline Series jet_on_branch(const Jet& f, const Series& y, size_t order) {
  int max_j = 0;
  for (int i = 0; i <= f.truncation_order(); ++i)
    for (int j = 0; i + j <= f.truncation_order(); ++j)
      if (f.coeff(i, j) != 0) max_j = std::max(max_j, j);
  std::vector<Series> ypow(max_j + 1);
  ypow[0] = Series{Rational(1)};
  for (int j = 1; j <= max_j; ++j) ypow[j] = series_mul(ypow[j - 1], y, order);

  Series g(order + 1, Rational(0));
  for (int i = 0; i <= f.truncation_order() && i <= static_cast<int>(order); ++i)
    for (int j = 0; i + j <= f.truncation_order(); ++j) {
      const Rational c = f.coeff(i, j);
      if (c == 0) continue;
      const Series& p = ypow[j];
      for (size_t k = 0; k < p.size() && i + k <= order; ++k) g[i + k] += c * p[k];
    }
  return g;
}

inline Jet partial_y(const Jet& f) {
  Jet out(f.truncation_order());
  for (int i = 0; i <= f.truncation_order(); ++i)
    for (int j = 1; i + j <= f.truncation_order(); ++j)
      out.set_coeff(i, j - 1, f.coeff(i, j) * Rational(j));
  return out;
}

// Solves f_y(x, y(x)) = 0 with y = O(x^2). The linearization has leading
// coefficient f02 (A-branch) or f12 * x (D-branch).
inline Series critical_branch(const Jet& f, bool d_branch, size_t order) {
  const Jet fy = partial_y(f);
  const Rational lead = d_branch ? f.derivative(1, 2) : f.derivative(0, 2);
  Series y(order + 1, Rational(0));
  for (size_t j = 2; j <= order; ++j) {
    const Series r = jet_on_branch(fy, y, order + 1);
    const size_t pos = d_branch ? j + 1 : j;
    if (r[pos] != 0) y[j] = -r[pos] / lead;
  }
  return y;
}

// A_3 .. A_kmax of an adapted A-branch jet.
inline std::vector<Rational> a_oracle(const Jet& f, int kmax) {
  const Series y = critical_branch(f, false, kmax);
  const Series g = jet_on_branch(f, y, kmax);
  std::vector<Rational> out;
  for (int k = 3; k <= kmax; ++k) out.push_back(Rational(factorial(k)) * g[k]);
  return out;
}

// D_6 .. D_kmax of an adapted D-branch jet.
inline std::vector<Rational> d_oracle(const Jet& f, int kmax) {
  const Series y = critical_branch(f, true, kmax);
  const Series g = jet_on_branch(f, y, kmax);
  std::vector<Rational> out;
  for (int k = 6; k <= kmax; ++k) out.push_back(Rational(factorial(k - 2)) * g[k - 2]);
  return out;
}

}  // namespace curvecount::testing

#endif
