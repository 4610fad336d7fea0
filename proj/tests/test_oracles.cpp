/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace curvecount;

TEST_CASE("genus-zero oracle values") {
  CHECK(km_p2(1) == 1);
  CHECK(km_p2(2) == 1);
  CHECK(km_p2(3) == 12);
  CHECK(km_p2(4) == 620);
  CHECK(km_p2(5) == 87304);
  CHECK_THROWS_AS(km_p2(0), std::invalid_argument);
}

TEST_CASE("genus-zero values are positive and strictly increasing from d = 3") {
  Integer prev = km_p2(2);
  for (long d = 3; d <= 9; ++d) {
    CHECK(km_p2(d) > 0);
    CHECK(km_p2(d) > prev);
    prev = km_p2(d);
  }
}

TEST_CASE("base suite passes") {
  Engine e;
  for (const auto& r : base_case_suite(e)) {
    CAPTURE(r.check_id);
    CHECK(r.passed);
  }
}

TEST_CASE("report lines carry verdict, values and provenance") {
  Engine e;
  const auto reports = base_case_suite(e);
  REQUIRE_FALSE(reports.empty());
  const std::string line = reports.front().to_line();
  CHECK(line.find("PASS") == 0);
  CHECK(line.find("expected 12") != std::string::npos);
  CHECK(line.find("[paper]") != std::string::npos);
  CHECK(reports.front().passed == (reports.front().expected == reports.front().computed));
}

TEST_CASE("named suites run independently and deterministically") {
  Engine e;
  const auto s1 = run_suite(e, "quadric");
  CHECK(s1.failures == 0);
  CHECK(s1.reports.size() == 8);
  Engine fresh;
  const auto s2 = run_suite(fresh, "quadric");
  REQUIRE(s1.reports.size() == s2.reports.size());
  for (size_t i = 0; i < s1.reports.size(); ++i)
    CHECK(s1.reports[i].computed == s2.reports[i].computed);
  CHECK_THROWS_AS(run_suite(e, "nosuch"), ParseError);
}

TEST_CASE("run_all aggregates every suite with zero failures") {
  Engine e;
  const auto summary = run_all(e);
  CHECK(summary.failures == 0);
  CHECK(summary.reports.size() == 42);
  for (const auto& r : summary.reports) {
    CAPTURE(r.check_id);
    CHECK(r.passed);
  }
}
