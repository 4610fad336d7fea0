/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singularity.hpp"
#include "surface.hpp"

using namespace curvecount;

TEST_CASE("p2 closed forms") {
  const Surface s = p2(3);
  CHECK(s.D == 9);
  CHECK(s.K == -9);
  CHECK(s.S == 9);
  CHECK(s.X2 == 3);
  CHECK(s.dimL == 9);
  CHECK(s.ample_level == 3);
  CHECK(p2(5).dimL == 20);
  CHECK(p2(4).dimL == 14);
  CHECK_THROWS_AS(p2(0), ParseError);
}

TEST_CASE("p1xp1 closed forms") {
  const Surface s = p1xp1(2, 5);
  CHECK(s.D == 20);
  CHECK(s.K == -14);
  CHECK(s.S == 8);
  CHECK(s.X2 == 4);
  CHECK(s.dimL == 17);
  CHECK(s.ample_level == 2);
  CHECK(p1xp1(3, 4).dimL == 19);
  CHECK(p1xp1(2, 3).dimL == 11);
  CHECK_THROWS_AS(p1xp1(1, 0), ParseError);
}

TEST_CASE("noether-style sanity: S + X2 = 12") {
  CHECK(p2(7).S + p2(7).X2 == 12);
  CHECK(p1xp1(3, 5).S + p1xp1(3, 5).X2 == 12);
}

TEST_CASE("points_through") {
  CHECK(points_through({7, Sing::A1, Flavor::Plain, 0, 0, 0, 0}, p2(5)) == 12);
  CHECK(points_through({6, Sing::A2, Flavor::Plain, 0, 0, 0, 0}, p2(5)) == 12);
  CHECK(points_through({4, Sing::D4, Flavor::Plain, 2, 0, 0, 0}, p2(5)) == 10);
  // Decreases by 1 per unit of n1, m1, theta, delta; by 2 per unit of m2.
  const Surface s = p1xp1(3, 4);
  const Query base{2, Sing::A3, Flavor::Proj, 1, 1, 1, 1};
  const long p0 = points_through(base, s);
  Query q = base;
  q.n1++;
  CHECK(points_through(q, s) == p0 - 1);
  q = base;
  q.m1++;
  CHECK(points_through(q, s) == p0 - 1);
  q = base;
  q.theta++;
  CHECK(points_through(q, s) == p0 - 1);
  q = base;
  q.delta++;
  CHECK(points_through(q, s) == p0 - 1);
  q = base;
  q.m2++;
  CHECK(points_through(q, s) == p0 - 2);
}

TEST_CASE("ampleness checks") {
  CHECK(check_ampleness({7, Sing::A1, Flavor::Plain, 0, 0, 0, 0}, p2(17)) ==
        Ampleness::Guaranteed);
  CHECK(check_ampleness({7, Sing::A1, Flavor::Plain, 0, 0, 0, 0}, p2(5)) ==
        Ampleness::NotGuaranteed);
  const Surface c = custom_surface("c", 9, -9, 9, 3, 9, std::nullopt);
  CHECK(check_ampleness({0, Sing::A1, Flavor::Plain, 0, 0, 0, 0}, c) == Ampleness::Unknown);
  CHECK(ampleness_bound(7, Sing::A1) == 15);
  CHECK(ampleness_bound(0, Sing::X9) == 4);
  CHECK(ampleness_bound(4, Sing::D4) == 11);
  CHECK(ampleness_bound(0, Sing::D7) == 5);
  CHECK(ampleness_bound(0, Sing::E7) == 4);
}

TEST_CASE("custom surface stores values verbatim, no inference") {
  const Surface c = custom_surface("byhand", 9, -9, 9, 3, 9, 3);
  const Surface s = p2(3);
  CHECK(c.D == s.D);
  CHECK(c.K == s.K);
  CHECK(c.dimL == s.dimL);
  CHECK_THROWS_AS(custom_surface("bad", 1, 1, 1, 1, -1, std::nullopt), ParseError);
}

TEST_CASE("surface JSON round trip") {
  const Surface s = p1xp1(2, 5);
  const Surface back = surface_from_json(surface_to_json(s));
  CHECK(back.name == s.name);
  CHECK(back.D == s.D);
  CHECK(back.K == s.K);
  CHECK(back.S == s.S);
  CHECK(back.X2 == s.X2);
  CHECK(back.dimL == s.dimL);
  CHECK(back.ample_level == s.ample_level);
  // null ample_level round-trips to "unknown".
  const Surface c = custom_surface("c", 3, 3, 9, 9, 19, std::nullopt);
  CHECK_FALSE(surface_from_json(surface_to_json(c)).ample_level.has_value());
}

TEST_CASE("surface JSON rejects malformed input") {
  CHECK_THROWS_AS(surface_from_json("{"), ParseError);
  CHECK_THROWS_AS(surface_from_json(R"({"name":"x"})"), ParseError);
  CHECK_THROWS_AS(surface_from_json(
                      R"({"name":"x","c1L_sq":"nine","c1L_c1TstarX":1,"c1TstarX_sq":1,"c2X":1,"dim_linear_system":1})"),
                  ParseError);
}

TEST_CASE("surface specs") {
  CHECK(surface_from_spec("p2:4").dimL == 14);
  CHECK(surface_from_spec("p1xp1:2,3").D == 12);
  CHECK_THROWS_AS(surface_from_spec("p2"), ParseError);
  CHECK_THROWS_AS(surface_from_spec("p2:x"), ParseError);
  CHECK_THROWS_AS(surface_from_spec("p1xp1:2"), ParseError);
  CHECK_THROWS_AS(surface_from_spec("file:/nonexistent/path.json"), ParseError);
  CHECK_THROWS_AS(surface_from_spec("plane:3"), ParseError);
}

TEST_CASE("singularity names round trip") {
  for (Sing s : {Sing::A1, Sing::A8, Sing::D4, Sing::D8, Sing::E6, Sing::E8, Sing::X9})
    CHECK(sing_from_name(sing_name(s)) == s);
  CHECK_THROWS_AS(sing_from_name("B2"), ParseError);
  CHECK(flavor_from_name("proj") == Flavor::Proj);
  CHECK_THROWS_AS(flavor_from_name("flat"), ParseError);
}
