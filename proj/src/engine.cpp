/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "engine.hpp"

#include <sstream>

namespace curvecount {

namespace {
// Top-level queries cap theta at 3; the rules raise theta at most once per
// codimension step, so 16 bounds every internal query.
constexpr int kMaxInternalTheta = 16;

Rational rbinom(int n, int k) { return Rational(binomial(n, k)); }
}  // namespace

const std::vector<Sing>& Engine::table_sings() {
  static const std::vector<Sing> kOrder = {
      Sing::A1, Sing::A2, Sing::A3, Sing::A4, Sing::A5, Sing::A6, Sing::A7, Sing::A8,
      Sing::D4, Sing::D5, Sing::D6, Sing::D7, Sing::D8,
      Sing::E6, Sing::E7, Sing::E8, Sing::X9};
  return kOrder;
}

const ChernPolynomial& Engine::count(const Query& q) {
  if (q.delta < 0 || q.n1 < 0 || q.m1 < 0 || q.m2 < 0 || q.theta < 0)
    throw std::invalid_argument("query fields must be non-negative: " + q.to_string());
  if (q.flavor == Flavor::Plain && q.theta != 0)
    throw std::invalid_argument("plain queries carry theta = 0: " + q.to_string());
  if (q.sing == Sing::X9Vee && q.flavor != Flavor::Proj)
    throw std::invalid_argument("X9Vee exists in proj flavor only: " + q.to_string());
  if (q.theta > kMaxInternalTheta)
    throw std::logic_error("internal theta overflow at " + q.to_string());
  // Hat queries are exempt until reduced: at theta = 0 they vanish identically,
  // so only the theta = 1 step can demand an out-of-envelope plain number.
  if (q.delta + codim(q.sing) > 8 && q.flavor != Flavor::Hat)
    throw UnresolvableQuery("query outside the delta + codim <= 8 envelope: " + q.to_string());

  // Well-founded recursion: every sub-query sits strictly below its parent in
  // (delta, degeneracy rank, theta); this also rules out cycles.
  const Measure m = measure_of(q);
  if (!stack_.empty() && !(m < stack_.back()))
    throw std::logic_error("recursion measure did not decrease at " + q.to_string());

  auto it = memo_.find(q);
  if (it != memo_.end()) return it->second;

  stack_.push_back(m);
  ChernPolynomial value;
  try {
    value = evaluate(q);
  } catch (...) {
    stack_.pop_back();
    throw;
  }
  stack_.pop_back();
  return memo_.emplace(q, std::move(value)).first->second;
}

ChernPolynomial Engine::evaluate(const Query& q) {
  switch (q.flavor) {
    case Flavor::Hat:
      return hat_reduce(q);
    case Flavor::Plain:
      if (q.sing == Sing::A1)
        return q.delta == 0 ? base_nodal(q.n1, q.m1, q.m2) : rule_append_node(q);
      return plain_from_proj(q);
    case Flavor::Proj:
      if (q.sing == Sing::A1) return q.theta >= 2 ? proj_theta_reduce(q) : rule_pa1(q);
      if (q.sing == Sing::D4) return rule_pd4(q);
      return rule_proj_chain(q);
  }
  throw std::logic_error("unreachable");
}

ChernPolynomial Engine::base_nodal(int n1, int m1, int m2) {
  using P = ChernPolynomial;
  if (m2 == 0) {
    if (n1 == 0 && m1 == 0) return P::D() * Rational(3) + P::K() * Rational(2) + P::X2();
    if (n1 == 1 && m1 == 0) return P::D() * Rational(3) + P::K();
    if (n1 == 2 && m1 == 0) return P::D();
    if (n1 == 0 && m1 == 1) return P::K() * Rational(3) + P::S();
    if (n1 == 1 && m1 == 1) return P::K();
    if (n1 == 0 && m1 == 2) return P::S();
  } else if (m2 == 1 && n1 == 0 && m1 == 0) {
    return P::X2();
  }
  return P::zero();
}

ChernPolynomial Engine::plain_from_proj(const Query& q) {
  const Rational inv_deg(1, degree_of_projection(q.sing));
  return count({q.delta, q.sing, Flavor::Proj, q.n1, q.m1, q.m2, 0}) * inv_deg;
}

ChernPolynomial Engine::hat_reduce(const Query& q) {
  if (q.theta == 0) return ChernPolynomial::zero();
  if (q.theta == 1) return count({q.delta, q.sing, Flavor::Plain, q.n1, q.m1, q.m2, 0});
  return count({q.delta, q.sing, Flavor::Hat, q.n1, q.m1 + 1, q.m2, q.theta - 1}) -
         count({q.delta, q.sing, Flavor::Hat, q.n1, q.m1, q.m2 + 1, q.theta - 2});
}

ChernPolynomial Engine::proj_theta_reduce(const Query& q) {
  return count({q.delta, q.sing, Flavor::Proj, q.n1, q.m1 + 1, q.m2, q.theta - 1}) -
         count({q.delta, q.sing, Flavor::Proj, q.n1, q.m1, q.m2 + 1, q.theta - 2});
}

ChernPolynomial Engine::rule_append_node(const Query& q) {
  const int d = q.delta;
  if (d < 1 || d > 7) throw RangeError("append-node rule needs 1 <= delta <= 7");
  auto N = [&](int delta, Sing s, int n1, int m1, int m2) -> const ChernPolynomial& {
    return count({delta, s, Flavor::Plain, n1, m1, m2, 0});
  };
  // N(A1^d) x N(A1, args), the marked point landing on nothing special.
  ChernPolynomial r = N(d - 1, Sing::A1, 0, 0, 0) * N(0, Sing::A1, q.n1, q.m1, q.m2);
  // Boundary: the marked point collides with one node (three terms), two nodes
  // become a tacnode, three nodes become a triple point.
  ChernPolynomial boundary =
      (N(d - 1, Sing::A1, q.n1, q.m1, q.m2) + N(d - 1, Sing::A1, q.n1 + 1, q.m1, q.m2) +
       N(d - 1, Sing::A2, q.n1, q.m1, q.m2) * Rational(3)) *
      Rational(d);
  if (binomial(d, 2) != 0)
    boundary += N(d - 2, Sing::A3, q.n1, q.m1, q.m2) * (Rational(4) * rbinom(d, 2));
  if (binomial(d, 3) != 0)
    boundary += N(d - 3, Sing::D4, q.n1, q.m1, q.m2) * (Rational(18) * rbinom(d, 3));
  return r - boundary;
}

ChernPolynomial Engine::rule_pa1(const Query& q) {
  const int d = q.delta;
  if (d > 7) throw RangeError("PA1 rule needs delta <= 7");
  auto N = [&](int n1, int m1, int m2) -> const ChernPolynomial& {
    return count({d, Sing::A1, Flavor::Plain, n1, m1, m2, 0});
  };
  if (q.theta == 0) return N(q.n1, q.m1, q.m2) * Rational(2);
  // theta = 1 (theta >= 2 goes through the theta reduction).
  ChernPolynomial r = N(q.n1, q.m1 + 1, q.m2) * Rational(2) + N(q.n1, q.m1, q.m2) +
                      N(q.n1 + 1, q.m1, q.m2);
  if (binomial(d, 2) != 0)
    r -= count({d - 2, Sing::D4, Flavor::Proj, q.n1, q.m1, q.m2, 0}) *
         (Rational(2) * rbinom(d, 2));
  return r;
}

ChernPolynomial Engine::rule_pd4(const Query& q) {
  const int d = q.delta;
  if (d > 4) throw RangeError("PD4 rule needs delta <= 4");
  if (q.theta >= 2) return proj_theta_reduce(q);
  if (q.theta == 0) {
    auto PA3 = [&](int n1, int m1, int th) -> const ChernPolynomial& {
      return count({d, Sing::A3, Flavor::Proj, n1, m1, q.m2, th});
    };
    ChernPolynomial r = PA3(q.n1, q.m1 + 1, 0) * Rational(2) - PA3(q.n1, q.m1, 1) * Rational(2) +
                        PA3(q.n1, q.m1, 0) + PA3(q.n1 + 1, q.m1, 0);
    if (d >= 1)
      r -= count({d - 1, Sing::D5, Flavor::Plain, q.n1, q.m1, q.m2, 0}) *
           (Rational(2) * rbinom(d, 1));
    if (binomial(d, 2) != 0)
      r -= count({d - 2, Sing::D6, Flavor::Proj, q.n1, q.m1, q.m2, 0}) *
           (Rational(2) * rbinom(d, 2));
    return r;
  }
  // theta = 1; the 1/3 compensates the three-to-one projection PD4 -> D4.
  auto PD4 = [&](int n1, int m1) -> const ChernPolynomial& {
    return count({d, Sing::D4, Flavor::Proj, n1, m1, q.m2, 0});
  };
  ChernPolynomial r = (PD4(q.n1, q.m1) + PD4(q.n1, q.m1 + 1) * Rational(3) +
                       PD4(q.n1 + 1, q.m1)) *
                      Rational(1, 3);
  if (binomial(d, 3) != 0)
    r -= count({d - 3, Sing::X9, Flavor::Plain, q.n1, q.m1, q.m2, 0}) *
         (Rational(24) * rbinom(d, 3));
  return r;
}

ChernPolynomial Engine::rule_proj_chain(const Query& q) {
  const int d = q.delta, n1 = q.n1, m1 = q.m1, m2 = q.m2, th = q.theta;
  // Sub-query helper; terms with vanishing binomial never evaluate.
  auto N = [&](int delta, Sing s, Flavor f, int nn1, int mm1, int mm2, int tth)
      -> const ChernPolynomial& { return count({delta, s, f, nn1, mm1, mm2, tth}); };
  auto P = [&](Sing s, int nn1, int mm1, int tth) -> const ChernPolynomial& {
    return N(d, s, Flavor::Proj, nn1, mm1, m2, tth);
  };

  switch (q.sing) {
    case Sing::A2: {
      if (d > 6) throw RangeError("PA2 rule needs delta <= 6");
      ChernPolynomial r = P(Sing::A1, n1, m1, th) + P(Sing::A1, n1, m1 + 1, th) +
                          P(Sing::A1, n1 + 1, m1, th);
      if (d >= 1) {
        r -= N(d - 1, Sing::A3, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
        r -= N(d - 1, Sing::D4, Flavor::Hat, n1, m1, m2, th) * (Rational(3) * rbinom(d, 1));
      }
      if (binomial(d, 2) != 0) {
        r -= N(d - 2, Sing::D4, Flavor::Proj, n1, m1, m2, th) * (Rational(4) * rbinom(d, 2));
        r -= N(d - 2, Sing::D5, Flavor::Hat, n1, m1, m2, th) * (Rational(4) * rbinom(d, 2));
      }
      return r;
    }
    case Sing::A3: {
      if (d > 5) throw RangeError("PA3 rule needs delta <= 5");
      ChernPolynomial r = P(Sing::A2, n1, m1, th + 1) * Rational(3) +
                          P(Sing::A2, n1 + 1, m1, th) + P(Sing::A2, n1, m1, th);
      if (d >= 1)
        r -= N(d - 1, Sing::A4, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
      if (binomial(d, 2) != 0)
        r -= N(d - 2, Sing::D5, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 2));
      return r;
    }
    case Sing::A4: {
      if (d > 4) throw RangeError("PA4 rule needs delta <= 4");
      ChernPolynomial r = (P(Sing::A3, n1, m1, th + 1) + P(Sing::A3, n1, m1 + 1, th) +
                           P(Sing::A3, n1, m1, th) + P(Sing::A3, n1 + 1, m1, th)) *
                          Rational(2);
      if (d >= 1)
        r -= N(d - 1, Sing::A5, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
      if (binomial(d, 2) != 0)
        r -= N(d - 2, Sing::D6, Flavor::Proj, n1, m1, m2, th) * (Rational(4) * rbinom(d, 2));
      return r;
    }
    case Sing::A5: {
      if (d > 3) throw RangeError("PA5 rule needs delta <= 3");
      ChernPolynomial r = P(Sing::A4, n1, m1, th + 1) * Rational(3) +
                          (P(Sing::A4, n1, m1 + 1, th) + P(Sing::A4, n1, m1, th) +
                           P(Sing::A4, n1 + 1, m1, th)) *
                              Rational(2);
      if (d >= 1) {
        r -= N(d - 1, Sing::A6, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
        r -= N(d - 1, Sing::E6, Flavor::Proj, n1, m1, m2, th) * rbinom(d, 1);
      }
      if (binomial(d, 2) != 0)
        r -= N(d - 2, Sing::D7, Flavor::Proj, n1, m1, m2, th) * (Rational(4) * rbinom(d, 2));
      return r;
    }
    case Sing::A6: {
      if (d > 2) throw RangeError("PA6 rule needs delta <= 2");
      ChernPolynomial r = P(Sing::A5, n1, m1, th + 1) * Rational(2) +
                          P(Sing::A5, n1, m1 + 1, th) * Rational(4) +
                          P(Sing::A5, n1, m1, th) * Rational(3) +
                          P(Sing::A5, n1 + 1, m1, th) * Rational(3);
      r -= P(Sing::D6, n1, m1, th) * Rational(2);
      r -= P(Sing::E6, n1, m1, th);
      if (d >= 1) {
        r -= N(d - 1, Sing::A7, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
        r -= N(d - 1, Sing::E7, Flavor::Proj, n1, m1, m2, th) * (Rational(3) * rbinom(d, 1));
        r -= N(d - 1, Sing::X9, Flavor::Hat, n1, m1, m2, th) * (Rational(6) * rbinom(d, 1));
      }
      if (binomial(d, 2) != 0)
        r -= N(d - 2, Sing::D8, Flavor::Proj, n1, m1, m2, th) * (Rational(6) * rbinom(d, 2));
      return r;
    }
    case Sing::A7: {
      if (d > 1) throw RangeError("PA7 rule needs delta <= 1");
      ChernPolynomial r = -P(Sing::A6, n1, m1, th + 1) +
                          P(Sing::A6, n1, m1 + 1, th) * Rational(8) +
                          P(Sing::A6, n1, m1, th) * Rational(5) +
                          P(Sing::A6, n1 + 1, m1, th) * Rational(5);
      r -= N(d, Sing::X9, Flavor::Hat, n1, m1, m2, th) * Rational(5);
      r -= P(Sing::D7, n1, m1, th) * Rational(6);
      r -= P(Sing::E7, n1, m1, th) * Rational(7);
      if (d >= 1) {
        r -= N(d - 1, Sing::A8, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
        r -= N(d - 1, Sing::E8, Flavor::Proj, n1, m1, m2, th) * (Rational(14) * rbinom(d, 1));
      }
      return r;
    }
    case Sing::A8: {
      if (d > 0) throw RangeError("PA8 rule needs delta = 0");
      return P(Sing::A7, n1, m1, th) * Rational(6) - P(Sing::A7, n1, m1, th + 1) * Rational(2) +
             P(Sing::A7, n1, m1 + 1, th) * Rational(10) +
             P(Sing::A7, n1 + 1, m1, th) * Rational(6) - P(Sing::D8, n1, m1, th) * Rational(8) -
             P(Sing::E8, n1, m1, th) * Rational(16) - P(Sing::X9Vee, n1, m1, th) * Rational(6);
    }
    case Sing::D5: {
      if (d > 3) throw RangeError("PD5 rule needs delta <= 3");
      ChernPolynomial r = P(Sing::D4, n1, m1, th + 1) + P(Sing::D4, n1, m1 + 1, th) +
                          P(Sing::D4, n1, m1, th) + P(Sing::D4, n1 + 1, m1, th);
      if (d >= 1)
        r -= N(d - 1, Sing::D6, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
      // Two nodes join the marked triple point to make a quadruple point.
      if (binomial(d, 2) != 0)
        r -= N(d - 2, Sing::X9, Flavor::Hat, n1, m1, m2, th) * (Rational(12) * rbinom(d, 2));
      if (binomial(d, 3) != 0)
        r -= N(d - 3, Sing::X9, Flavor::Proj, n1, m1, m2, th) * (Rational(18) * rbinom(d, 3));
      return r;
    }
    case Sing::D6: {
      if (d > 2) throw RangeError("PD6 rule needs delta <= 2");
      ChernPolynomial r = P(Sing::D5, n1, m1, th + 1) * Rational(4) + P(Sing::D5, n1, m1, th) +
                          P(Sing::D5, n1 + 1, m1, th);
      if (d >= 1) {
        r -= N(d - 1, Sing::D7, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
        r -= N(d - 1, Sing::E7, Flavor::Proj, n1, m1, m2, th) * rbinom(d, 1);
      }
      return r;
    }
    case Sing::D7: {
      if (d > 1) throw RangeError("PD7 rule needs delta <= 1");
      ChernPolynomial r = P(Sing::D6, n1, m1, th + 1) * Rational(4) +
                          (P(Sing::D6, n1, m1 + 1, th) + P(Sing::D6, n1, m1, th) +
                           P(Sing::D6, n1 + 1, m1, th)) *
                              Rational(2);
      if (d >= 1)
        r -= N(d - 1, Sing::D8, Flavor::Proj, n1, m1, m2, th) * (Rational(2) * rbinom(d, 1));
      return r;
    }
    case Sing::D8: {
      if (d > 0) throw RangeError("PD8 rule needs delta = 0");
      return P(Sing::D7, n1, m1, th) * Rational(4) + P(Sing::D7, n1, m1 + 1, th) * Rational(6) +
             P(Sing::D7, n1, m1, th + 1) * Rational(3) +
             P(Sing::D7, n1 + 1, m1, th) * Rational(4) - P(Sing::E8, n1, m1, th) * Rational(3);
    }
    case Sing::E6: {
      if (d > 2) throw RangeError("PE6 rule needs delta <= 2");
      ChernPolynomial r = P(Sing::D5, n1, m1 + 1, th) * Rational(2) -
                          P(Sing::D5, n1, m1, th + 1) + P(Sing::D5, n1, m1, th) +
                          P(Sing::D5, n1 + 1, m1, th);
      if (d >= 1) {
        r -= N(d - 1, Sing::E7, Flavor::Proj, n1, m1, m2, th) * rbinom(d, 1);
        r -= N(d - 1, Sing::X9, Flavor::Hat, n1, m1, m2, th) * (Rational(4) * rbinom(d, 1));
      }
      return r;
    }
    case Sing::E7: {
      if (d > 1) throw RangeError("PE7 rule needs delta <= 1");
      ChernPolynomial r = P(Sing::D6, n1, m1, th) - P(Sing::D6, n1, m1, th + 1) +
                          P(Sing::D6, n1, m1 + 1, th) * Rational(2) +
                          P(Sing::D6, n1 + 1, m1, th);
      if (d >= 1)
        r -= N(d - 1, Sing::X9, Flavor::Proj, n1, m1, m2, th) * (Rational(3) * rbinom(d, 1));
      return r;
    }
    case Sing::E8: {
      if (d > 0) throw RangeError("PE8 rule needs delta = 0");
      // e(L_PE8) = y + 2*lambda + x1 + c1 over the PE7 closure.
      return P(Sing::E7, n1, m1, th) + P(Sing::E7, n1, m1 + 1, th) +
             P(Sing::E7, n1 + 1, m1, th) + P(Sing::E7, n1, m1, th + 1) * Rational(2);
    }
    case Sing::X9: {
      if (d > 0) throw RangeError("PX9 rule needs delta = 0");
      // e(L_PX9) = y + 3(x1 - lambda) + c1 over the PE7 closure.
      return P(Sing::E7, n1, m1, th) + P(Sing::E7, n1, m1 + 1, th) * Rational(3) -
             P(Sing::E7, n1, m1, th + 1) * Rational(3) + P(Sing::E7, n1 + 1, m1, th);
    }
    case Sing::X9Vee: {
      if (d > 0) throw RangeError("PX9Vee rule needs delta = 0");
      auto H = [&](int nn1, int mm1, int tth) -> const ChernPolynomial& {
        return N(0, Sing::X9, Flavor::Hat, nn1, mm1, m2, tth);
      };
      return (H(n1, m1, th) + H(n1, m1 + 1, th) + H(n1 + 1, m1, th)) * Rational(3) +
             H(n1, m1, th + 1) * Rational(6);
    }
    default:
      throw std::logic_error("no proj rule for " + sing_name(q.sing));
  }
}

ChernPolynomial Engine::unordered_count(const Query& q) {
  const long div_of = (q.sing == Sing::A1) ? q.delta + 1 : q.delta;
  Rational inv(1);
  inv /= Rational(factorial(div_of));
  return count(q) * inv;
}

std::vector<Engine::TableEntry> Engine::build_table() {
  std::vector<TableEntry> table;
  for (int delta = 0; delta <= 7; ++delta)
    for (Sing s : table_sings())
      if (delta + codim(s) <= 8)
        table.push_back({delta, s, unordered_count({delta, s, Flavor::Plain, 0, 0, 0, 0})});
  return table;
}

std::string Engine::memo_dump() const {
  std::ostringstream out;
  for (const auto& [q, p] : memo_) out << q.to_string() << " = " << p.to_string() << "\n";
  return out.str();
}

}  // namespace curvecount
