/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "jet.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace curvecount {

namespace {
const std::array<std::string, 19> kLabelNames = {
    "A0", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8+",
    "D4", "D5", "D6", "D7", "D8+", "E6", "E7", "E8", "X9", "beyond-scope"};

Rational rpow(const Rational& q, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}
}  // namespace

const std::string& label_name(SingularityLabel l) {
  return kLabelNames[static_cast<size_t>(l)];
}

Jet::Jet(int truncation_order) : trunc_(truncation_order) {
  if (trunc_ < 0) throw std::invalid_argument("negative truncation order");
}

void Jet::set_coeff(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (i + j > trunc_) return;
  if (c == 0)
    coeffs_.erase({i, j});
  else
    coeffs_[{i, j}] = c;
}

Rational Jet::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Jet::derivative(int i, int j) const {
  return coeff(i, j) * Rational(factorial(i)) * Rational(factorial(j));
}

Jet Jet::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty germ");

  struct Term {
    Rational c;
    int i, j;
  };
  std::vector<Term> terms;
  size_t pos = 0;
  auto parse_uint = [&](const char* what) -> long {
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what + " in germ at '" +
                                       s.substr(start) + "'");
    const std::string digits = s.substr(start, pos - start);
    if (digits.size() > 18) throw ParseError("integer too large in germ: " + digits);
    return std::stol(digits);
  };

  int max_deg = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' between germ terms at '" + s.substr(pos) + "'");
    }
    Rational c(1);
    bool have_body = false;
    if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      long num = parse_uint("number");
      long den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = parse_uint("denominator");
        if (den == 0) throw ParseError("zero denominator in germ");
      }
      c = rat(num, den);
      have_body = true;
    }
    int i = 0, j = 0;
    while (pos < s.size() && (s[pos] == '*' || s[pos] == 'x' || s[pos] == 'y')) {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      const char var = s[pos++];
      long e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = parse_uint("exponent");
        if (e > 64) throw ParseError("exponent too large in germ");
      }
      (var == 'x' ? i : j) += static_cast<int>(e);
      have_body = true;
    }
    if (!have_body) throw ParseError("empty term in germ at '" + s.substr(pos) + "'");
    terms.push_back({Rational(sign) * c, i, j});
    max_deg = std::max(max_deg, i + j);
  }

  Jet jet(std::max(8, max_deg));
  for (const auto& t : terms) jet.set_coeff(t.i, t.j, jet.coeff(t.i, t.j) + t.c);
  return jet;
}

Jet Jet::linear_substitute(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d) const {
  if (a * d - b * c == 0) throw std::invalid_argument("singular substitution matrix");
  Jet out(trunc_);
  for (const auto& [ij, coeff] : coeffs_) {
    const auto [i, j] = ij;
    // (a x + b y)^i (c x + d y)^j expanded by double binomial convolution.
    for (int p = 0; p <= i; ++p) {
      const Rational ca = Rational(binomial(i, p)) * rpow(a, p) * rpow(b, i - p);
      if (ca == 0) continue;
      for (int q = 0; q <= j; ++q) {
        const Rational cb = Rational(binomial(j, q)) * rpow(c, q) * rpow(d, j - q);
        if (cb == 0) continue;
        const int xi = p + q, yj = (i - p) + (j - q);
        out.set_coeff(xi, yj, out.coeff(xi, yj) + coeff * ca * cb);
      }
    }
  }
  return out;
}

Jet Jet::scaled(const Rational& c) const {
  Jet out(trunc_);
  if (c == 0) return out;
  out.coeffs_ = coeffs_;
  for (auto& [ij, v] : out.coeffs_) v *= c;
  return out;
}

std::string Jet::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [ij, c] : coeffs_) {
    Rational a = c;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      out << "-";
      a = -a;
    }
    const auto [i, j] = ij;
    if (a != 1 || (i == 0 && j == 0)) out << rational_to_string(a);
    if (i > 0) {
      out << "x";
      if (i > 1) out << "^" << i;
    }
    if (j > 0) {
      if (i > 0 || a != 1) out << "*";
      out << "y";
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Binary forms and univariate helpers.

namespace {

using Poly = std::vector<Rational>;  // univariate, index = power

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative_poly(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  assert(!b.empty());
  while (degree(a) >= degree(b) && !a.empty()) {
    const Rational q = a.back() / b.back();
    const int shift = degree(a) - degree(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly gcd_poly(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly dehomogenize(const BinaryForm& f) {
  Poly g(f.a.begin(), f.a.end());
  trim(g);
  return g;
}

}  // namespace

bool binary_form_is_zero(const BinaryForm& f) {
  return std::all_of(f.a.begin(), f.a.end(), [](const Rational& c) { return c == 0; });
}

bool binary_form_has_repeated_root(const BinaryForm& f) {
  if (binary_form_is_zero(f)) return true;
  const Poly g = dehomogenize(f);
  const int mult_at_infinity = f.n - degree(g);
  if (mult_at_infinity >= 2) return true;
  if (degree(g) < 2) return false;
  return degree(gcd_poly(g, derivative_poly(g))) >= 1;
}

std::optional<std::pair<Rational, Rational>> cubic_repeated_direction(const BinaryForm& f) {
  assert(f.n == 3);
  if (binary_form_is_zero(f)) return std::nullopt;
  const Poly g = dehomogenize(f);
  if (3 - degree(g) >= 2) return {{Rational(1), Rational(0)}};
  const Poly h = gcd_poly(g, derivative_poly(g));
  if (degree(h) < 1) return std::nullopt;
  if (degree(h) == 1) return {{-h[0] / h[1], Rational(1)}};
  // Degree-2 gcd means a triple root (two distinct double roots cannot fit in a
  // cubic), so h is a perfect square.
  return {{-h[1] / (Rational(2) * h[2]), Rational(1)}};
}

// ---------------------------------------------------------------------------
// Adapted frames and the directional quantities.

namespace {

std::pair<AdaptedFrame, Jet> frame_to_first_axis(const Jet& jet, const Rational& w1,
                                                 const Rational& w2) {
  // Substitution matrix T = [w u] maps e1 to w; the frame is its inverse.
  Rational u1(0), u2(1);
  if (w1 == 0) {
    u1 = 1;
    u2 = 0;
  }
  const Rational det = w1 * u2 - u1 * w2;
  assert(det != 0);
  AdaptedFrame frame{{u2 / det, -u1 / det, -w2 / det, w1 / det}};
  return {frame, jet.linear_substitute(w1, u1, w2, u2)};
}

BinaryForm cubic_form_of(const Jet& jet) {
  return {3, {jet.coeff(0, 3), jet.coeff(1, 2), jet.coeff(2, 1), jet.coeff(3, 0)}};
}

BinaryForm quartic_form_of(const Jet& jet) {
  return {4,
          {jet.coeff(0, 4), jet.coeff(1, 3), jet.coeff(2, 2), jet.coeff(3, 1), jet.coeff(4, 0)}};
}

}  // namespace

std::pair<AdaptedFrame, Jet> adapt_frame(const Jet& jet) {
  const Rational f20 = jet.derivative(2, 0), f11 = jet.derivative(1, 1),
                 f02 = jet.derivative(0, 2);
  const bool hessian_zero = (f20 == 0 && f11 == 0 && f02 == 0);
  if (!hessian_zero) {
    if (f20 * f02 - f11 * f11 != 0)
      throw NoDistinguishedDirection("Hessian is non-degenerate");
    // Rank one: the kernel direction is rational.
    if (f20 == 0 && f11 == 0) return frame_to_first_axis(jet, Rational(1), Rational(0));
    return frame_to_first_axis(jet, -f11, f20);
  }
  const BinaryForm cubic = cubic_form_of(jet);
  if (binary_form_is_zero(cubic))
    throw NoDistinguishedDirection("cubic form vanishes identically");
  auto w = cubic_repeated_direction(cubic);
  if (!w) throw NoDistinguishedDirection("cubic form has distinct roots");
  return frame_to_first_axis(jet, w->first, w->second);
}

std::vector<Rational> a_quantities(const Jet& g, int kmax) {
  assert(kmax <= 8);
  const Rational f02 = g.derivative(0, 2);
  if (f02 == 0) throw std::domain_error("a_quantities needs f_02 != 0");
  const Rational f03 = g.derivative(0, 3), f04 = g.derivative(0, 4);
  const Rational f12 = g.derivative(1, 2), f13 = g.derivative(1, 3);
  const Rational f21 = g.derivative(2, 1), f22 = g.derivative(2, 2),
                 f23 = g.derivative(2, 3);
  const Rational f30 = g.derivative(3, 0), f31 = g.derivative(3, 1),
                 f32 = g.derivative(3, 2);
  const Rational f40 = g.derivative(4, 0), f41 = g.derivative(4, 1),
                 f42 = g.derivative(4, 2);
  const Rational f50 = g.derivative(5, 0), f51 = g.derivative(5, 1);
  const Rational f60 = g.derivative(6, 0), f61 = g.derivative(6, 1);
  const Rational f70 = g.derivative(7, 0), f80 = g.derivative(8, 0);

  std::vector<Rational> out;
  auto emit = [&](const Rational& v) { out.push_back(v); };
  if (kmax >= 3) emit(f30);
  if (kmax >= 4) emit(f40 - Rational(3) * f21 * f21 / f02);
  if (kmax >= 5)
    emit(f50 - Rational(10) * f21 * f31 / f02 + Rational(15) * f12 * f21 * f21 / rpow(f02, 2));
  if (kmax >= 6)
    emit(f60 - Rational(15) * f21 * f41 / f02 - Rational(10) * f31 * f31 / f02 +
         Rational(60) * f12 * f21 * f31 / rpow(f02, 2) +
         Rational(45) * f21 * f21 * f22 / rpow(f02, 2) -
         Rational(15) * f03 * rpow(f21, 3) / rpow(f02, 3) -
         Rational(90) * f12 * f12 * f21 * f21 / rpow(f02, 3));
  if (kmax >= 7)
    emit(f70 - Rational(21) * f21 * f51 / f02 - Rational(35) * f31 * f41 / f02 +
         Rational(105) * f12 * f21 * f41 / rpow(f02, 2) +
         Rational(105) * f21 * f21 * f32 / rpow(f02, 2) +
         Rational(70) * f12 * f31 * f31 / rpow(f02, 2) +
         Rational(210) * f21 * f22 * f31 / rpow(f02, 2) -
         Rational(105) * f03 * f21 * f21 * f31 / rpow(f02, 3) -
         Rational(420) * f12 * f12 * f21 * f31 / rpow(f02, 3) -
         Rational(630) * f12 * f21 * f21 * f22 / rpow(f02, 3) -
         Rational(105) * f13 * rpow(f21, 3) / rpow(f02, 3) +
         Rational(315) * f03 * f12 * rpow(f21, 3) / rpow(f02, 4) +
         Rational(630) * rpow(f12, 3) * f21 * f21 / rpow(f02, 4));
  if (kmax >= 8)
    emit(f80 - Rational(28) * f21 * f61 / f02 - Rational(56) * f31 * f51 / f02 +
         Rational(210) * f21 * f21 * f42 / rpow(f02, 2) +
         Rational(420) * f21 * f22 * f41 / rpow(f02, 2) -
         Rational(210) * f03 * f21 * f21 * f41 / rpow(f02, 3) +
         Rational(560) * f21 * f31 * f32 / rpow(f02, 2) -
         Rational(840) * f13 * f21 * f21 * f31 / rpow(f02, 3) -
         Rational(420) * rpow(f21, 3) * f23 / rpow(f02, 3) +
         Rational(1260) * f03 * rpow(f21, 3) * f22 / rpow(f02, 4) -
         Rational(35) * f41 * f41 / f02 + Rational(280) * f22 * f31 * f31 / rpow(f02, 2) -
         Rational(280) * f03 * f21 * f31 * f31 / rpow(f02, 3) -
         Rational(1260) * f21 * f21 * f22 * f22 / rpow(f02, 3) +
         Rational(105) * f04 * rpow(f21, 4) / rpow(f02, 4) -
         Rational(315) * f03 * f03 * rpow(f21, 4) / rpow(f02, 5) +
         Rational(168) * f21 * f51 * f12 / rpow(f02, 2) +
         Rational(280) * f31 * f41 * f12 / rpow(f02, 2) -
         Rational(1680) * f21 * f21 * f32 * f12 / rpow(f02, 3) -
         Rational(3360) * f21 * f22 * f31 * f12 / rpow(f02, 3) +
         Rational(2520) * f03 * f21 * f21 * f31 * f12 / rpow(f02, 4) +
         Rational(2520) * f13 * rpow(f21, 3) * f12 / rpow(f02, 4) -
         Rational(840) * f21 * f41 * f12 * f12 / rpow(f02, 3) +
         Rational(7560) * f21 * f21 * f22 * f12 * f12 / rpow(f02, 4) -
         Rational(560) * f31 * f31 * f12 * f12 / rpow(f02, 3) -
         Rational(5040) * f03 * rpow(f21, 3) * f12 * f12 / rpow(f02, 5) +
         Rational(3360) * f21 * f31 * rpow(f12, 3) / rpow(f02, 4) -
         Rational(5040) * f21 * f21 * rpow(f12, 4) / rpow(f02, 5));
  return out;
}

std::vector<Rational> d_quantities(const Jet& g, int kmax) {
  assert(kmax <= 8);
  const Rational f12 = g.derivative(1, 2);
  if (f12 == 0) throw std::domain_error("d_quantities needs f_12 != 0");
  const Rational f03 = g.derivative(0, 3), f22 = g.derivative(2, 2);
  const Rational f31 = g.derivative(3, 1), f40 = g.derivative(4, 0),
                 f41 = g.derivative(4, 1);
  const Rational f50 = g.derivative(5, 0), f60 = g.derivative(6, 0);

  std::vector<Rational> out;
  if (kmax >= 6) out.push_back(f40);
  if (kmax >= 7) out.push_back(f50 - Rational(5) * f31 * f31 / (Rational(3) * f12));
  if (kmax >= 8)
    out.push_back(f60 + Rational(5) * f03 * f31 * f50 / (Rational(3) * f12 * f12) -
                  Rational(5) * f31 * f41 / f12 -
                  Rational(10) * f03 * rpow(f31, 3) / (Rational(3) * rpow(f12, 3)) +
                  Rational(5) * f22 * f31 * f31 / rpow(f12, 2));
  return out;
}

SingularityLabel classify_origin(const Jet& jet) {
  if (jet.truncation_order() < 8)
    throw TruncationTooShort("classifier needs jets truncated at order >= 8");

  if (jet.coeff(0, 0) != 0) return SingularityLabel::A0;
  if (jet.derivative(1, 0) != 0 || jet.derivative(0, 1) != 0) return SingularityLabel::A0;

  const Rational f20 = jet.derivative(2, 0), f11 = jet.derivative(1, 1),
                 f02 = jet.derivative(0, 2);
  if (f20 * f02 - f11 * f11 != 0) return SingularityLabel::A1;

  if (!(f20 == 0 && f11 == 0 && f02 == 0)) {
    // Rank-one Hessian: A-series along the kernel direction.
    const Jet g = adapt_frame(jet).second;
    const auto a = a_quantities(g, 8);  // A_3 .. A_8
    for (size_t idx = 0; idx < a.size(); ++idx)
      if (a[idx] != 0) return static_cast<SingularityLabel>(
          static_cast<int>(SingularityLabel::A2) + static_cast<int>(idx));
    return SingularityLabel::AtLeastA8;
  }

  const BinaryForm cubic = cubic_form_of(jet);
  if (binary_form_is_zero(cubic)) {
    const BinaryForm quartic = quartic_form_of(jet);
    if (!binary_form_is_zero(quartic) && !binary_form_has_repeated_root(quartic))
      return SingularityLabel::X9;
    return SingularityLabel::BeyondScope;
  }
  if (!binary_form_has_repeated_root(cubic)) return SingularityLabel::D4;

  const Jet g = adapt_frame(jet).second;
  if (g.derivative(1, 2) != 0) {
    const auto d = d_quantities(g, 8);  // D_6 .. D_8
    for (size_t idx = 0; idx < d.size(); ++idx)
      if (d[idx] != 0) return static_cast<SingularityLabel>(
          static_cast<int>(SingularityLabel::D5) + static_cast<int>(idx));
    return SingularityLabel::AtLeastD8;
  }
  // f_12 = 0 forces a triple root, so f_03 != 0 here; the E-tower orders E6
  // before E7 (the E7 lemma leaves f_40 = 0 implicit).
  if (g.derivative(0, 3) == 0) return SingularityLabel::BeyondScope;
  if (g.derivative(4, 0) != 0) return SingularityLabel::E6;
  if (g.derivative(3, 1) != 0) return SingularityLabel::E7;
  if (g.derivative(5, 0) != 0) return SingularityLabel::E8;
  return SingularityLabel::BeyondScope;
}

}  // namespace curvecount
