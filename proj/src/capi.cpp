/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "curvecount.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "engine.hpp"
#include "jet.hpp"
#include "oracles.hpp"

using nlohmann::json;
using namespace curvecount;

struct cc_engine {
  Engine impl;
};
struct cc_surface {
  Surface impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cc_status fail(cc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
cc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UnresolvableQuery& e) {
    return fail(CC_ERR_UNRESOLVABLE, e.what());
  } catch (const RangeError& e) {
    return fail(CC_ERR_RANGE, e.what());
  } catch (const ParseError& e) {
    return fail(CC_ERR_PARSE, e.what());
  } catch (const TruncationTooShort& e) {
    return fail(CC_ERR_TRUNCATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CC_ERR_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(CC_ERR_INTERNAL, e.what());
  }
}

Flavor to_flavor(cc_flavor f) {
  switch (f) {
    case CC_FLAVOR_PLAIN: return Flavor::Plain;
    case CC_FLAVOR_PROJ: return Flavor::Proj;
    case CC_FLAVOR_HAT: return Flavor::Hat;
  }
  throw std::invalid_argument("bad flavor value");
}

Query make_query(const char* sing, int delta, cc_flavor flavor, int n1, int m1, int m2,
                 int theta) {
  if (!sing) throw std::invalid_argument("singularity name is null");
  Query q{delta, sing_from_name(sing), to_flavor(flavor), n1, m1, m2, theta};
  if (q.delta < 0 || q.n1 < 0 || q.m1 < 0 || q.m2 < 0 || q.theta < 0)
    throw std::invalid_argument("query fields must be non-negative");
  if (q.delta + codim(q.sing) > 8)
    throw std::invalid_argument("delta + codim exceeds the supported envelope of 8");
  if (q.theta > 3) throw std::invalid_argument("theta exceeds 3, the dimension of PTX");
  if (q.flavor == Flavor::Plain && q.theta != 0)
    throw std::invalid_argument("plain queries carry theta = 0");
  if (q.sing == Sing::X9Vee && q.flavor != Flavor::Proj)
    throw std::invalid_argument("X9v exists in proj flavor only");
  return q;
}

json surface_json(const Surface& s) { return json::parse(surface_to_json(s)); }

json count_record(Engine& engine, const Surface* surface, const Query& q, bool ordered) {
  const ChernPolynomial poly = ordered ? engine.count(q) : engine.unordered_count(q);
  json rec;
  rec["delta"] = q.delta;
  rec["singularity"] = sing_name(q.sing);
  rec["flavor"] = flavor_name(q.flavor);
  rec["point_class"] = {{"n1", q.n1}, {"m1", q.m1}, {"m2", q.m2}};
  rec["theta"] = q.theta;
  rec["ordered"] = ordered;
  rec["ampleness_required"] = ampleness_bound(q.delta, q.sing);
  rec["formula"] = poly.to_string();
  if (surface) {
    rec["surface"] = surface_json(*surface);
    rec["points"] = points_through(q, *surface);
    rec["count"] = rational_to_string(poly.eval(*surface));
    rec["ampleness_status"] = ampleness_name(check_ampleness(q, *surface));
  } else {
    rec["surface"] = nullptr;
    rec["points"] = nullptr;
    rec["count"] = nullptr;
    rec["ampleness_status"] = ampleness_name(Ampleness::Unknown);
  }
  return rec;
}

}  // namespace

extern "C" {

const char* cc_last_error(void) { return g_last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

cc_engine* cc_engine_new(void) { return new (std::nothrow) cc_engine; }

void cc_engine_free(cc_engine* e) { delete e; }

cc_status cc_surface_from_spec(const char* spec, cc_surface** out) {
  if (!spec || !out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = new cc_surface{surface_from_spec(spec)};
    return CC_OK;
  });
}

cc_status cc_surface_from_json(const char* json_text, cc_surface** out) {
  if (!json_text || !out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = new cc_surface{surface_from_json(json_text)};
    return CC_OK;
  });
}

void cc_surface_free(cc_surface* s) { delete s; }

cc_status cc_surface_to_json(const cc_surface* s, char** json_out) {
  if (!s || !json_out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    *json_out = dup_string(surface_to_json(s->impl));
    return CC_OK;
  });
}

cc_status cc_count_json(cc_engine* e, const cc_surface* surface_or_null, const char* sing,
                        int delta, cc_flavor flavor, int n1, int m1, int m2, int theta,
                        int ordered, char** json_out) {
  if (!e || !json_out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    const Query q = make_query(sing, delta, flavor, n1, m1, m2, theta);
    const Surface* surf = surface_or_null ? &surface_or_null->impl : nullptr;
    *json_out = dup_string(count_record(e->impl, surf, q, ordered != 0).dump());
    return CC_OK;
  });
}

cc_status cc_formula(cc_engine* e, const char* sing, int delta, cc_flavor flavor, int n1,
                     int m1, int m2, int theta, int ordered, char** text_out) {
  if (!e || !text_out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    const Query q = make_query(sing, delta, flavor, n1, m1, m2, theta);
    const ChernPolynomial poly = ordered ? e->impl.count(q) : e->impl.unordered_count(q);
    *text_out = dup_string(poly.to_string());
    return CC_OK;
  });
}

cc_status cc_table_json(cc_engine* e, const cc_surface* surface_or_null, char** json_out) {
  if (!e || !json_out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    const Surface* surf = surface_or_null ? &surface_or_null->impl : nullptr;
    json rows = json::array();
    for (const auto& entry : e->impl.build_table()) {
      json row;
      row["delta"] = entry.delta;
      row["singularity"] = sing_name(entry.sing);
      row["formula"] = entry.poly.to_string();
      if (surf) {
        row["points"] = points_through({entry.delta, entry.sing, Flavor::Plain, 0, 0, 0, 0}, *surf);
        row["count"] = rational_to_string(entry.poly.eval(*surf));
      } else {
        row["points"] = nullptr;
        row["count"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    *json_out = dup_string(rows.dump());
    return CC_OK;
  });
}

cc_status cc_classify(const char* germ_text, char** label_out) {
  if (!germ_text || !label_out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    const Jet jet = Jet::parse(germ_text);
    *label_out = dup_string(label_name(classify_origin(jet)));
    return CC_OK;
  });
}

cc_status cc_verify_json(cc_engine* e, const char* suite, char** json_out, int* failures_out) {
  if (!e || !suite || !json_out || !failures_out) return fail(CC_ERR_USAGE, "null argument");
  return guarded([&] {
    const VerificationSummary summary = run_suite(e->impl, suite);
    json rows = json::array();
    for (const auto& r : summary.reports) {
      json row;
      row["check_id"] = r.check_id;
      row["expected"] = r.expected.get_str();
      row["computed"] = r.computed.get_str();
      row["provenance"] = r.provenance;
      row["passed"] = r.passed;
      rows.push_back(std::move(row));
    }
    *json_out = dup_string(rows.dump());
    *failures_out = summary.failures;
    return CC_OK;
  });
}

}  // extern "C"
