/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_ORACLES_HPP
#define CURVECOUNT_ORACLES_HPP

#include <string>
#include <vector>

#include "engine.hpp"

namespace curvecount {

// One verification item. For value checks expected/computed are the two sides of
// the comparison; for property sweeps expected is 0 and computed counts the
// violations found.
struct CheckReport {
  std::string check_id;
  Integer expected;
  Integer computed;
  std::string provenance;  // "paper", "oracle" or "derived"
  bool passed = false;
  std::string to_line() const;
};

// Genus-zero count of degree-d rational plane curves through 3d-1 points,
// by the quantum-cohomology recursion
//   n_d = sum_{d1+d2=d} n_d1 n_d2 (d1^2 d2^2 C(3d-4,3d1-2) - d1^3 d2 C(3d-4,3d1-1)).
// Used purely as an independent oracle; values are cached (n_1 = n_2 = 1).
const Integer& km_p2(long d);

// Base-case values: nodal cubics, node on a line, the quadric (2,3) case and the
// forced vanishing on lines.
std::vector<CheckReport> base_case_suite(Engine& engine);

// Endpoint values for quintics in P^2 plus the reducible-configuration tallies
// that reproduce them by binomial arithmetic from smaller counts.
std::vector<CheckReport> quintic_suite(Engine& engine);

// The finer quartic checks: nodes on lines/points, the triple-point values, and
// the trinodal count against the genus-zero oracle.
std::vector<CheckReport> quartic_fine_suite(Engine& engine);

// P^1 x P^1 values and the two reconciliations against the genus-zero fixtures
// 3840 and 87544.
std::vector<CheckReport> quadric_suite(Engine& engine);

// Brute-force combinatorial calibrations (binodal/trinodal cubics) and the
// genus-zero oracle values themselves.
std::vector<CheckReport> calibration_suite(Engine& engine);

// Whole-table properties: the table builds, integrality/divisibility over the
// surface sweep, (a,b)-symmetry, the degree relation and hat identities as
// polynomial identities, memo determinism, theta-route consistency.
std::vector<CheckReport> property_suite(Engine& engine);

struct VerificationSummary {
  std::vector<CheckReport> reports;
  int failures = 0;
};

// Runs one named suite ("base", "quintic", "quartic", "quadric", "calibration",
// "properties") or all of them for "all".
VerificationSummary run_suite(Engine& engine, const std::string& name);
VerificationSummary run_all(Engine& engine);

}  // namespace curvecount

#endif
