/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_SINGULARITY_HPP
#define CURVECOUNT_SINGULARITY_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include "surface.hpp"

namespace curvecount {

enum class Sing {
  A1, A2, A3, A4, A5, A6, A7, A8,
  D4, D5, D6, D7, D8,
  E6, E7, E8,
  X9,
  X9Vee,  // the dual quadruple-point space; valid in Proj flavor only
};

enum class Flavor {
  Plain,  // marked point on X
  Proj,   // marked direction with the defining derivative vanishing along it
  Hat,    // free marked direction
};

struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnresolvableQuery : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Codimension of the equisingular stratum: k for A_k/D_k/E_k, 8 for the quadruple
// point (indexed by Milnor number 9, hence the name X9).
int codim(Sing s);

// Number of distinguished directions per singular point: 2 for A1, 3 for D4,
// 4 for X9, 1 otherwise. X9Vee has no plain counterpart.
int degree_of_projection(Sing s);

// Sufficient ampleness from the main result: 2*delta + C with
// C_{A_k} = k, C_{D_4} = 3, C_{D_k} = k-2 (k>4), C_{E_k} = k-3, C_{X_9} = 4.
int ampleness_bound(int delta, Sing s);

const std::string& sing_name(Sing s);
Sing sing_from_name(const std::string& name);  // throws ParseError
const std::string& flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

// One number N(A_1^delta X, n1, m1, m2[, theta]) of the recursion.
struct Query {
  int delta = 0;
  Sing sing = Sing::A1;
  Flavor flavor = Flavor::Plain;
  int n1 = 0, m1 = 0, m2 = 0;
  int theta = 0;

  auto operator<=>(const Query&) const = default;
  std::string to_string() const;
};

// Generic points remaining after the singularity and marked-point conditions:
// dimL - codim - delta - n1 - m1 - 2*m2 - theta. May be negative; callers report
// that alongside the count instead of failing.
long points_through(const Query& q, const Surface& s);

enum class Ampleness { Guaranteed, NotGuaranteed, Unknown };
Ampleness check_ampleness(const Query& q, const Surface& s);
const std::string& ampleness_name(Ampleness a);

// Strict measure for the recursion: every sub-evaluation decreases
// (delta, degeneracy_rank, theta) lexicographically. The rank orders flavors
// hat > plain > proj per singularity and singularities along the order the
// theorems consume them (A_k before D_k before E_k within a codimension;
// X9-hat below PA7 and PX9Vee, which call it at unchanged delta).
int degeneracy_rank(Sing s, Flavor f);

struct Measure {
  int delta, rank, theta;
  auto operator<=>(const Measure&) const = default;
};
inline Measure measure_of(const Query& q) {
  return {q.delta, degeneracy_rank(q.sing, q.flavor), q.theta};
}

}  // namespace curvecount

#endif
