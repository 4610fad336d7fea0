/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "singularity.hpp"

#include <array>
#include <sstream>

namespace curvecount {

int codim(Sing s) {
  switch (s) {
    case Sing::A1: return 1;
    case Sing::A2: return 2;
    case Sing::A3: return 3;
    case Sing::A4: return 4;
    case Sing::A5: return 5;
    case Sing::A6: return 6;
    case Sing::A7: return 7;
    case Sing::A8: return 8;
    case Sing::D4: return 4;
    case Sing::D5: return 5;
    case Sing::D6: return 6;
    case Sing::D7: return 7;
    case Sing::D8: return 8;
    case Sing::E6: return 6;
    case Sing::E7: return 7;
    case Sing::E8: return 8;
    case Sing::X9: return 8;
    case Sing::X9Vee: return 8;
  }
  throw std::logic_error("unreachable");
}

int degree_of_projection(Sing s) {
  switch (s) {
    case Sing::A1: return 2;
    case Sing::D4: return 3;
    case Sing::X9: return 4;
    case Sing::X9Vee:
      throw RangeError("X9Vee has no plain counterpart");
    default: return 1;
  }
}

int ampleness_bound(int delta, Sing s) {
  int c = 0;
  switch (s) {
    case Sing::A1: case Sing::A2: case Sing::A3: case Sing::A4:
    case Sing::A5: case Sing::A6: case Sing::A7: case Sing::A8:
      c = codim(s);
      break;
    case Sing::D4:
      c = 3;
      break;
    case Sing::D5: case Sing::D6: case Sing::D7: case Sing::D8:
      c = codim(s) - 2;
      break;
    case Sing::E6: case Sing::E7: case Sing::E8:
      c = codim(s) - 3;
      break;
    case Sing::X9: case Sing::X9Vee:
      c = 4;
      break;
  }
  return 2 * delta + c;
}

namespace {
const std::array<std::string, 18> kSingNames = {
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
    "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "X9", "X9v"};
const std::array<std::string, 3> kFlavorNames = {"plain", "proj", "hat"};
const std::array<std::string, 3> kAmplenessNames = {"guaranteed", "not_guaranteed", "unknown"};
}  // namespace

const std::string& sing_name(Sing s) { return kSingNames[static_cast<size_t>(s)]; }

Sing sing_from_name(const std::string& name) {
  for (size_t i = 0; i < kSingNames.size(); ++i)
    if (kSingNames[i] == name) return static_cast<Sing>(i);
  throw ParseError("unknown singularity '" + name + "' (expected A1..A8, D4..D8, E6..E8, X9)");
}

const std::string& flavor_name(Flavor f) { return kFlavorNames[static_cast<size_t>(f)]; }

Flavor flavor_from_name(const std::string& name) {
  for (size_t i = 0; i < kFlavorNames.size(); ++i)
    if (kFlavorNames[i] == name) return static_cast<Flavor>(i);
  throw ParseError("unknown flavor '" + name + "' (expected plain, proj or hat)");
}

std::string Query::to_string() const {
  std::ostringstream out;
  out << "N(";
  if (delta > 0) out << "A1^" << delta << " ";
  switch (flavor) {
    case Flavor::Plain: break;
    case Flavor::Proj: out << "P"; break;
    case Flavor::Hat: out << "hat"; break;
  }
  out << sing_name(sing) << ", " << n1 << ", " << m1 << ", " << m2;
  if (flavor != Flavor::Plain) out << ", " << theta;
  out << ")";
  return out.str();
}

long points_through(const Query& q, const Surface& s) {
  return s.dimL - codim(q.sing) - q.delta - q.n1 - q.m1 - 2L * q.m2 - q.theta;
}

Ampleness check_ampleness(const Query& q, const Surface& s) {
  if (!s.ample_level) return Ampleness::Unknown;
  return *s.ample_level >= ampleness_bound(q.delta, q.sing) ? Ampleness::Guaranteed
                                                            : Ampleness::NotGuaranteed;
}

const std::string& ampleness_name(Ampleness a) {
  return kAmplenessNames[static_cast<size_t>(a)];
}

int degeneracy_rank(Sing s, Flavor f) {
  // Base rank per singularity, in the order the chain of theorems consumes them;
  // hat sits above plain above proj, except A1 where the base case is plain.
  int base;
  switch (s) {
    case Sing::A1: base = 0; break;
    case Sing::A2: base = 3; break;
    case Sing::A3: base = 6; break;
    case Sing::D4: base = 9; break;
    case Sing::A4: base = 12; break;
    case Sing::D5: base = 15; break;
    case Sing::A5: base = 18; break;
    case Sing::D6: base = 21; break;
    case Sing::E6: base = 24; break;
    case Sing::A6: base = 27; break;
    case Sing::D7: base = 30; break;
    case Sing::E7: base = 33; break;
    case Sing::X9: base = 36; break;
    case Sing::A7: base = 39; break;
    case Sing::E8: base = 42; break;
    case Sing::D8: base = 45; break;
    case Sing::X9Vee: base = 48; break;
    case Sing::A8: base = 51; break;
    default: throw std::logic_error("unreachable");
  }
  int off;
  if (s == Sing::A1) {
    // The A1 base case / append-node theorem is plain; PA1 reduces to it.
    off = (f == Flavor::Plain) ? 0 : (f == Flavor::Proj ? 1 : 2);
  } else {
    off = (f == Flavor::Proj) ? 0 : (f == Flavor::Plain ? 1 : 2);
  }
  return base + off;
}

}  // namespace curvecount
