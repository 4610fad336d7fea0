/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "chern.hpp"

#include <cassert>
#include <sstream>

#include "surface.hpp"

namespace curvecount {

// Recursion depth bound: no value the engine produces exceeds total degree 9.
static constexpr int kMaxTotalDegree = 9;

std::string ChernMonomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto put = [&](const char* name, int e) {
    if (e == 0) return;
    if (!first) out << "*";
    out << name;
    if (e > 1) out << "^" << e;
    first = false;
  };
  put("D", d);
  put("K", k);
  put("S", s);
  put("X2", x2);
  if (first) out << "1";
  return out.str();
}

ChernPolynomial ChernPolynomial::constant(const Rational& c) {
  ChernPolynomial p;
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

ChernPolynomial ChernPolynomial::monomial(const ChernMonomial& m, const Rational& c) {
  ChernPolynomial p;
  p.add_term(m, c);
  return p;
}

void ChernPolynomial::add_term(const ChernMonomial& m, const Rational& c) {
  if (c == 0) return;
  assert(m.d >= 0 && m.k >= 0 && m.s >= 0 && m.x2 >= 0);
  assert(m.total_degree() <= kMaxTotalDegree);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ChernPolynomial::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
  ChernPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.d + mb.d, ma.k + mb.k, ma.s + mb.s, ma.x2 + mb.x2}, ca * cb);
  return r;
}

ChernPolynomial operator-(const ChernPolynomial& a) {
  ChernPolynomial r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
  return r;
}

Rational ChernPolynomial::eval(const Surface& surf) const {
  auto ipow = [](const Integer& base, int e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    term *= ipow(surf.D, m.d);
    term *= ipow(surf.K, m.k);
    term *= ipow(surf.S, m.s);
    term *= ipow(surf.X2, m.x2);
    total += term;
  }
  return total;
}

std::string ChernPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // std::map iterates ascending; render descending so leading terms come first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    const bool unit_mono = (m == ChernMonomial{0, 0, 0, 0});
    if (a == 1 && !unit_mono) {
      out << m.to_string();
    } else {
      out << rational_to_string(a);
      if (!unit_mono) out << "*" << m.to_string();
    }
    first = false;
  }
  return out.str();
}

}  // namespace curvecount
