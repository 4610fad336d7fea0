/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_SURFACE_HPP
#define CURVECOUNT_SURFACE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace curvecount {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A surface together with the linear system it carries: the four intersection
// numbers of (L, X), the projective dimension of |L|, and the largest k for which
// sufficient k-ampleness is guaranteed (absent for hand-entered surfaces).
//
// Sign convention: K = c1(L).c1(T*X) uses the cotangent bundle, so K is negative
// for Fano surfaces (P^2: K = -3d, P^1xP^1: K = -2(a+b)).
struct Surface {
  std::string name;
  Integer D;   // c1(L)^2
  Integer K;   // c1(L).c1(T*X)
  Integer S;   // c1(T*X)^2
  Integer X2;  // c2(T*X)
  long dimL = 0;
  std::optional<long> ample_level;
};

// P^2 with L = O(d): (D, K, S, X2) = (d^2, -3d, 9, 3), dimL = d(d+3)/2, ampleness d.
Surface p2(long d);

// P^1 x P^1 with L = O(a,b): (2ab, -2(a+b), 8, 4), dimL = ab+a+b, ampleness min(a,b).
Surface p1xp1(long a, long b);

// Stores the given values verbatim; no Riemann-Roch inference is attempted.
Surface custom_surface(const std::string& name, const Integer& D, const Integer& K,
                       const Integer& S, const Integer& X2, long dimL,
                       std::optional<long> ample_level);

// JSON schema: {"name": string, "c1L_sq": int, "c1L_c1TstarX": int,
//   "c1TstarX_sq": int, "c2X": int, "dim_linear_system": int, "ample_level": int|null}
Surface surface_from_json(const std::string& json_text);
std::string surface_to_json(const Surface& s);

// Parses "p2:<d>", "p1xp1:<a>,<b>" or "file:<path>". Throws ParseError.
Surface surface_from_spec(const std::string& spec);

}  // namespace curvecount

#endif
