/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "oracles.hpp"

#include <functional>
#include <sstream>

namespace curvecount {

namespace {

Integer C(long n, long k) { return binomial(n, k); }

// Unordered plain count evaluated on a surface.
Rational uval(Engine& e, const Surface& s, int delta, Sing sing, int n1 = 0, int m1 = 0,
              int m2 = 0) {
  return e.unordered_count({delta, sing, Flavor::Plain, n1, m1, m2, 0}).eval(s);
}


// Ordered count divided by the factorial of the unconstrained nodes only; used
// for A1 counts whose distinguished node carries a point-class insertion.
Rational uval_marked(Engine& e, const Surface& s, int delta, Sing sing, int n1, int m1 = 0,
                     int m2 = 0) {
  const Rational v = e.count({delta, sing, Flavor::Plain, n1, m1, m2, 0}).eval(s);
  return v / Rational(factorial(delta));
}

// Builds one report; a non-integer or throwing computation fails the check.
CheckReport checked(const std::string& id, const Integer& expected, const std::string& prov,
                    const std::function<Rational()>& compute) {
  CheckReport r{id, expected, Integer(0), prov, false};
  try {
    const Rational v = compute();
    r.computed = v.get_num();
    r.passed = is_integer(v) && r.computed == r.expected;
  } catch (const std::exception&) {
    r.passed = false;
  }
  return r;
}

CheckReport violations(const std::string& id, const std::function<long()>& count_violations) {
  CheckReport r{id, Integer(0), Integer(0), "derived", false};
  try {
    r.computed = count_violations();
    r.passed = (r.computed == 0);
  } catch (const std::exception&) {
    r.computed = -1;
    r.passed = false;
  }
  return r;
}

}  // namespace

std::string CheckReport::to_line() const {
  std::ostringstream out;
  out << (passed ? "PASS" : "FAIL") << " " << check_id << ": expected " << expected.get_str()
      << ", computed " << computed.get_str() << " [" << provenance << "]";
  return out.str();
}

const Integer& km_p2(long d) {
  if (d < 1) throw std::invalid_argument("km_p2 needs d >= 1");
  static std::map<long, Integer> cache{{1, Integer(1)}};
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Integer total(0);
  for (long d1 = 1; d1 < d; ++d1) {
    const long d2 = d - d1;
    const Integer nd1 = km_p2(d1);
    const Integer nd2 = km_p2(d2);
    Integer term = Integer(d1) * d1 * d2 * d2 * C(3 * d - 4, 3 * d1 - 2) -
                   Integer(d1) * d1 * d1 * d2 * C(3 * d - 4, 3 * d1 - 1);
    total += nd1 * nd2 * term;
  }
  return cache.emplace(d, total).first->second;
}

std::vector<CheckReport> base_case_suite(Engine& e) {
  const Surface p3 = p2(3), p1 = p2(1), q23 = p1xp1(2, 3);
  std::vector<CheckReport> out;
  out.push_back(checked("base-nodal-cubics-p2d3", 12, "paper",
                        [&]() -> Rational { return uval(e, p3, 0, Sing::A1); }));
  // n1 inserts c1(L) = 3H on cubics, so a node on a line is the value over 3.
  out.push_back(checked("base-node-on-line-p2d3", 6, "paper",
                        [&]() -> Rational { return uval(e, p3, 0, Sing::A1, 1) / 3; }));
  out.push_back(checked("base-nodal-p1xp1-2x3", 20, "paper",
                        [&]() -> Rational { return uval(e, q23, 0, Sing::A1); }));
  out.push_back(checked("base-nodal-line-vanishes", 0, "derived",
                        [&]() -> Rational { return uval(e, p1, 0, Sing::A1); }));
  return out;
}

std::vector<CheckReport> quintic_suite(Engine& e) {
  const Surface p5 = p2(5), p4 = p2(4), p3 = p2(3);
  std::vector<CheckReport> out;

  out.push_back(checked("quintic-8-nodal", 26136, "paper",
                        [&]() -> Rational { return uval(e, p5, 7, Sing::A1); }));
  out.push_back(checked("quintic-6-nodal-cusp", 171072, "paper",
                        [&]() -> Rational { return uval(e, p5, 6, Sing::A2); }));
  out.push_back(checked("quintic-4-nodal-triple", 95877, "paper",
                        [&]() -> Rational { return uval(e, p5, 4, Sing::D4); }));
  out.push_back(checked("quintic-4-nodal-triple-on-line", 17952, "paper",
                        [&]() -> Rational { return uval(e, p5, 4, Sing::D4, 1) / 5; }));
  out.push_back(checked("quintic-4-nodal-triple-on-point", 1260, "paper",
                        [&]() -> Rational { return uval(e, p5, 4, Sing::D4, 2) / 25; }));

  // Reducible-configuration tallies, rebuilt from binomials and smaller counts.
  out.push_back(checked("quintic-8-nodal-tally", 26136, "derived", [&]() -> Rational {
    const Rational nodal_cubics = uval(e, p3, 0, Sing::A1);  // 12
    return Rational(C(12, 8)) * nodal_cubics * C(4, 2) / 2 + Rational(C(12, 5)) * C(7, 5) / 2;
  }));
  out.push_back(checked("quintic-6-nodal-cusp-tally", 171072, "derived", [&]() -> Rational {
    const Rational cuspidal_cubics = uval(e, p3, 0, Sing::A2);       // 24
    const Rational binodal_cuspidal_quartics = uval(e, p4, 2, Sing::A2);  // 2304
    return Rational(C(12, 7)) * cuspidal_cubics + Rational(C(12, 10)) * binodal_cuspidal_quartics;
  }));
  out.push_back(checked("quintic-4-nodal-triple-tally", 95877, "derived", [&]() -> Rational {
    const Rational triple_quartics = uval(e, p4, 0, Sing::D4);  // 60
    const Rational trinodal_on_line = uval_marked(e, p4, 2, Sing::A1, 1) / 4;  // 843
    const Rational irred_on_line = trinodal_on_line - (Rational(C(10, 9)) * 3 + C(10, 2));  // 768
    const Rational nodal_cubics = uval(e, p3, 0, Sing::A1);                    // 12
    const Rational cubics_node_on_line = uval(e, p3, 0, Sing::A1, 1) / 3;      // 6
    return Rational(C(12, 10)) * triple_quartics + Rational(C(12, 11)) * Rational(km_p2(4)) * 3 +
           Rational(C(12, 2)) * irred_on_line + Rational(C(12, 8)) * nodal_cubics +
           Rational(C(12, 5)) * cubics_node_on_line * 2 + Rational(C(12, 9)) * C(3, 2) * 3 +
           Rational(C(12, 2)) * C(10, 2) / 2;
  }));
  out.push_back(checked("quintic-triple-on-line-tally", 17952, "derived", [&]() -> Rational {
    const Rational quartic_triple_on_line = uval(e, p4, 0, Sing::D4, 1) / 4;  // 12
    const Rational trinodal_on_line = uval_marked(e, p4, 2, Sing::A1, 1) / 4;        // 843
    const Rational irred_on_line = trinodal_on_line - (Rational(C(10, 9)) * 3 + C(10, 2));
    const Rational trinodal_on_point = uval_marked(e, p4, 2, Sing::A1, 2) / 16;  // 105
    const Rational irred_on_point = trinodal_on_point - C(9, 8);          // 96
    const Rational cubics_node_on_line = uval(e, p3, 0, Sing::A1, 1) / 3;
    return Rational(C(11, 9)) * quartic_triple_on_line + Rational(C(11, 10)) * irred_on_line +
           Rational(C(11, 2)) * irred_on_point + Rational(C(11, 7)) * cubics_node_on_line +
           Rational(C(11, 5)) * 2 + Rational(C(11, 9)) * 3 * C(2, 1) / 2 +
           Rational(C(11, 2)) * C(9, 1);
  }));
  out.push_back(checked("quintic-triple-on-point-tally", 1260, "derived", [&]() -> Rational {
    const Rational quartic_triple_on_point = uval(e, p4, 0, Sing::D4, 2) / 16;  // 1
    const Rational trinodal_on_point = uval_marked(e, p4, 2, Sing::A1, 2) / 16;
    const Rational irred_on_point = trinodal_on_point - C(9, 8);
    return Rational(C(10, 8)) * quartic_triple_on_point + Rational(C(10, 9)) * irred_on_point +
           Rational(C(10, 4)) + Rational(C(10, 8)) * C(2, 1) / 2;
  }));
  return out;
}

std::vector<CheckReport> quartic_fine_suite(Engine& e) {
  const Surface p4 = p2(4);
  std::vector<CheckReport> out;
  out.push_back(checked("quartic-trinodal-node-on-line", 843, "paper",
                        [&]() -> Rational { return uval_marked(e, p4, 2, Sing::A1, 1) / 4; }));
  out.push_back(checked("quartic-irreducible-node-on-line", 768, "paper", [&]() -> Rational {
    return uval_marked(e, p4, 2, Sing::A1, 1) / 4 - (Rational(C(10, 9)) * 3 + C(10, 2));
  }));
  out.push_back(checked("quartic-trinodal-node-on-point", 105, "paper",
                        [&]() -> Rational { return uval_marked(e, p4, 2, Sing::A1, 2) / 16; }));
  out.push_back(checked("quartic-irreducible-node-on-point", 96, "paper",
                        [&]() -> Rational { return uval_marked(e, p4, 2, Sing::A1, 2) / 16 - C(9, 8); }));
  out.push_back(checked("quartic-triple-point", 60, "paper",
                        [&]() -> Rational { return uval(e, p4, 0, Sing::D4); }));
  out.push_back(checked("quartic-triple-on-line", 12, "paper",
                        [&]() -> Rational { return uval(e, p4, 0, Sing::D4, 1) / 4; }));
  out.push_back(checked("quartic-triple-on-point", 1, "paper",
                        [&]() -> Rational { return uval(e, p4, 0, Sing::D4, 2) / 16; }));
  out.push_back(checked("quartic-binodal-cusp", 2304, "paper",
                        [&]() -> Rational { return uval(e, p4, 2, Sing::A2); }));
  // 675 = 620 irreducible rational quartics + 55 cubic+line pairs.
  out.push_back(checked("quartic-trinodal-vs-genus-zero", km_p2(4) + C(11, 2), "derived",
                        [&]() -> Rational { return uval(e, p4, 2, Sing::A1); }));
  return out;
}

std::vector<CheckReport> quadric_suite(Engine& e) {
  const Surface q23 = p1xp1(2, 3), q24 = p1xp1(2, 4), q25 = p1xp1(2, 5), q33 = p1xp1(3, 3),
                q34 = p1xp1(3, 4);
  std::vector<CheckReport> out;
  out.push_back(checked("quadric-2x3-nodal", 20, "paper",
                        [&]() -> Rational { return uval(e, q23, 0, Sing::A1); }));
  out.push_back(checked("quadric-2x4-binodal", 252, "paper",
                        [&]() -> Rational { return uval(e, q24, 1, Sing::A1); }));
  out.push_back(checked("quadric-3x3-trinodal", 1944, "paper",
                        [&]() -> Rational { return uval(e, q33, 2, Sing::A1); }));
  out.push_back(checked("quadric-2x5-four-nodal", 7038, "paper",
                        [&]() -> Rational { return uval(e, q25, 3, Sing::A1); }));
  out.push_back(checked("quadric-3x4-six-nodal", 122865, "paper",
                        [&]() -> Rational { return uval(e, q34, 5, Sing::A1); }));
  out.push_back(checked("quadric-2x4-irreducible-binodal", 240, "paper", [&]() -> Rational {
    return uval(e, q24, 1, Sing::A1) - C(12, 1);
  }));
  // Genus-zero fixtures 3840 and 87544 are taken from the literature, not recomputed.
  out.push_back(checked("quadric-2x5-genus-zero-reconciliation", 3840, "paper", [&]() -> Rational {
    const Rational irred24 = uval(e, q24, 1, Sing::A1) - C(12, 1);  // 240
    return uval(e, q25, 3, Sing::A1) - Rational(C(13, 1)) * irred24 -
           Rational(C(13, 11)) * C(2, 1) / 2;
  }));
  out.push_back(checked("quadric-3x4-genus-zero-reconciliation", 87544, "paper", [&]() -> Rational {
    const Rational irred24 = uval(e, q24, 1, Sing::A1) - C(12, 1);
    const Rational nodal23 = uval(e, q23, 0, Sing::A1);       // 20
    const Rational trinodal33 = uval(e, q33, 2, Sing::A1);    // 1944
    return uval(e, q34, 5, Sing::A1) -
           (Rational(C(13, 3)) * nodal23 + Rational(C(13, 8)) +
            Rational(C(13, 11)) * C(2, 1) / 2 +
            Rational(C(13, 12)) * (trinodal33 - C(12, 11)) + Rational(C(13, 12)) * irred24);
  }));
  return out;
}

std::vector<CheckReport> calibration_suite(Engine& e) {
  const Surface p3 = p2(3);
  std::vector<CheckReport> out;
  // Every binodal cubic through 7 generic points is a conic (5 points) + line (2).
  out.push_back(checked("calibration-binodal-cubics", C(7, 5), "oracle",
                        [&]() -> Rational { return uval(e, p3, 1, Sing::A1); }));
  // Every trinodal cubic is a triangle of lines: perfect matchings of 6 points.
  out.push_back(checked("calibration-trinodal-cubics",
                        factorial(6) / (Integer(8) * factorial(3)), "oracle",
                        [&]() -> Rational { return uval(e, p3, 2, Sing::A1); }));
  out.push_back(checked("calibration-genus-zero-n3", 12, "paper",
                        [&]() -> Rational { return Rational(km_p2(3)); }));
  out.push_back(checked("calibration-genus-zero-n4", 620, "paper",
                        [&]() -> Rational { return Rational(km_p2(4)); }));
  return out;
}

std::vector<CheckReport> property_suite(Engine& e) {
  std::vector<CheckReport> out;

  out.push_back(violations("property-table-builds", [&]() -> long {
    try {
      e.build_table();
      return 0L;
    } catch (const UnresolvableQuery&) {
      return 1L;
    }
  }));

  std::vector<Surface> sweep;
  for (long d = 3; d <= 9; ++d) sweep.push_back(p2(d));
  for (long a = 1; a <= 5; ++a)
    for (long b = 1; b <= 5; ++b) sweep.push_back(p1xp1(a, b));

  out.push_back(violations("property-integrality-divisibility", [&]() -> long {
    long bad = 0;
    const auto table = e.build_table();
    for (const auto& s : sweep)
      for (const auto& entry : table)
        if (!is_integer(entry.poly.eval(s))) ++bad;
    return bad;
  }));

  out.push_back(violations("property-quadric-symmetry", [&]() -> long {
    long bad = 0;
    const auto table = e.build_table();
    for (long a = 1; a <= 5; ++a)
      for (long b = a + 1; b <= 5; ++b) {
        const Surface sab = p1xp1(a, b), sba = p1xp1(b, a);
        for (const auto& entry : table)
          if (entry.poly.eval(sab) != entry.poly.eval(sba)) ++bad;
      }
    return bad;
  }));

  out.push_back(violations("property-degree-relation", [&]() -> long {
    long bad = 0;
    for (int delta = 0; delta <= 7; ++delta)
      for (Sing s : Engine::table_sings()) {
        if (delta + codim(s) > 8) continue;
        const ChernPolynomial plain = e.count({delta, s, Flavor::Plain, 0, 0, 0, 0});
        const ChernPolynomial proj = e.count({delta, s, Flavor::Proj, 0, 0, 0, 0});
        if (plain * Rational(degree_of_projection(s)) != proj) ++bad;
      }
    return bad;
  }));

  out.push_back(violations("property-hat-theta1", [&]() -> long {
    long bad = 0;
    for (int delta = 0; delta <= 7; ++delta)
      for (Sing s : Engine::table_sings()) {
        if (delta + codim(s) > 8) continue;
        if (e.count({delta, s, Flavor::Hat, 0, 0, 0, 1}) !=
            e.count({delta, s, Flavor::Plain, 0, 0, 0, 0}))
          ++bad;
      }
    return bad;
  }));

  out.push_back(violations("property-memo-determinism", [&]() -> long {
    Engine fresh1, fresh2;
    fresh1.build_table();
    fresh2.build_table();
    return fresh1.memo_dump() == fresh2.memo_dump() ? 0L : 1L;
  }));

  out.push_back(violations("property-theta-route-consistency", [&]() -> long {
    long bad = 0;
    for (int delta = 0; delta <= 1; ++delta)
      for (Sing s : {Sing::A2, Sing::A3, Sing::A4, Sing::A5, Sing::A6, Sing::A7, Sing::A8,
                     Sing::D5, Sing::D6, Sing::D7, Sing::D8, Sing::E6, Sing::E7, Sing::E8,
                     Sing::X9, Sing::X9Vee}) {
        if (delta + codim(s) > 8) continue;
        if (delta > 0 && (s == Sing::X9Vee || s == Sing::X9)) continue;
        // PA7 at delta = 1 carries a same-delta X9-hat term, which at theta >= 1
        // demands the out-of-envelope plain N(A1 X9); itself only ever needed at
        // theta = 0.
        if (delta > 0 && s == Sing::A7) continue;
        for (int theta = 2; theta <= 3; ++theta) {
          const ChernPolynomial direct = e.count({delta, s, Flavor::Proj, 0, 0, 0, theta});
          const ChernPolynomial reduced =
              e.count({delta, s, Flavor::Proj, 0, 1, 0, theta - 1}) -
              e.count({delta, s, Flavor::Proj, 0, 0, 1, theta - 2});
          if (direct != reduced) ++bad;
        }
      }
    return bad;
  }));

  return out;
}

VerificationSummary run_suite(Engine& e, const std::string& name) {
  VerificationSummary summary;
  auto extend = [&](std::vector<CheckReport> reports) {
    for (auto& r : reports) {
      if (!r.passed) ++summary.failures;
      summary.reports.push_back(std::move(r));
    }
  };
  if (name == "base" || name == "all") extend(base_case_suite(e));
  else if (name == "quintic") extend(quintic_suite(e));
  else if (name == "quartic") extend(quartic_fine_suite(e));
  else if (name == "quadric") extend(quadric_suite(e));
  else if (name == "calibration") extend(calibration_suite(e));
  else if (name == "properties") extend(property_suite(e));
  else if (name != "all") throw ParseError("unknown suite '" + name +
                                           "' (expected base, quintic, quartic, quadric, "
                                           "calibration, properties or all)");
  if (name == "all") {
    extend(quintic_suite(e));
    extend(quartic_fine_suite(e));
    extend(quadric_suite(e));
    extend(calibration_suite(e));
    extend(property_suite(e));
  }
  return summary;
}

VerificationSummary run_all(Engine& e) { return run_suite(e, "all"); }

}  // namespace curvecount
