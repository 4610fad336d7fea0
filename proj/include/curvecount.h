/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* C interface to the curve-counting engine: exact counts of curves with delta
 * nodes and one further singularity in a sufficiently ample linear system on a
 * compact complex surface, a germ classifier for the underlying singularity
 * criteria, and the verification suites.
 *
 * All handles are opaque. Functions that can fail return cc_status; on any
 * failure cc_last_error() carries a one-line diagnostic (thread-local).
 * Returned strings are heap-allocated and must be released with
 * cc_string_free(). Counts are exact decimal strings (they exceed 64 bits).
 */
#ifndef CURVECOUNT_H
#define CURVECOUNT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cc_engine cc_engine;
typedef struct cc_surface cc_surface;

typedef enum {
  CC_OK = 0,
  CC_ERR_USAGE = 1,        /* invalid arguments / query outside the envelope */
  CC_ERR_UNRESOLVABLE = 2, /* recursion left the delta + codim <= 8 domain */
  CC_ERR_RANGE = 3,        /* delta outside a rule's stated range */
  CC_ERR_PARSE = 4,        /* unparsable surface spec, JSON or germ */
  CC_ERR_TRUNCATION = 5,   /* jet truncated below the classifier's needs */
  CC_ERR_INTERNAL = 6
} cc_status;

typedef enum {
  CC_FLAVOR_PLAIN = 0, /* marked point on the surface */
  CC_FLAVOR_PROJ = 1,  /* marked direction with the defining derivative vanishing */
  CC_FLAVOR_HAT = 2    /* free marked direction */
} cc_flavor;

const char* cc_last_error(void);
void cc_string_free(char* s);

/* ------------------------------------------------------------------ engine */

cc_engine* cc_engine_new(void);
void cc_engine_free(cc_engine* e);

/* ---------------------------------------------------------------- surfaces */

/* spec is "p2:<d>", "p1xp1:<a>,<b>" or "file:<path>" (path to a surface JSON
 * file with keys name, c1L_sq, c1L_c1TstarX, c1TstarX_sq, c2X,
 * dim_linear_system, ample_level). */
cc_status cc_surface_from_spec(const char* spec, cc_surface** out);
cc_status cc_surface_from_json(const char* json_text, cc_surface** out);
void cc_surface_free(cc_surface* s);
cc_status cc_surface_to_json(const cc_surface* s, char** json_out);

/* ------------------------------------------------------------------ counts */

/* Singularity names: "A1".."A8", "D4".."D8", "E6".."E8", "X9" ("X9v" is
 * accepted for proj-flavor queries only).
 *
 * Computes one count and returns the full record as JSON:
 *   {"surface": {...}|null, "delta": int, "singularity": str, "flavor": str,
 *    "point_class": {"n1": int, "m1": int, "m2": int}, "theta": int,
 *    "ordered": bool, "points": int|null, "count": str|null,
 *    "ampleness_required": int, "ampleness_status": str, "formula": str}
 * With a null surface the result is symbolic: "count"/"points" are null and
 * "formula" carries the universal polynomial in D, K, S, X2.
 * Unless ordered is nonzero, the count is divided by (delta+1)! when the
 * distinguished singularity is A1 and by delta! otherwise. */
cc_status cc_count_json(cc_engine* e, const cc_surface* surface_or_null, const char* sing,
                        int delta, cc_flavor flavor, int n1, int m1, int m2, int theta,
                        int ordered, char** json_out);

/* Canonical polynomial text for one query (same normalization switch). */
cc_status cc_formula(cc_engine* e, const char* sing, int delta, cc_flavor flavor, int n1,
                     int m1, int m2, int theta, int ordered, char** text_out);

/* All unordered table entries with delta + codim <= 8 as a JSON array of
 *   {"delta": int, "singularity": str, "points": int|null, "count": str|null,
 *    "formula": str}
 * ordered by delta ascending, then A1..A8, D4..D8, E6..E8, X9. */
cc_status cc_table_json(cc_engine* e, const cc_surface* surface_or_null, char** json_out);

/* -------------------------------------------------------------- classifier */

/* Germ grammar: sums of terms c*x^i*y^j with integer or rational c.
 * Labels: "A0".."A7", "A8+", "D4".."D7", "D8+", "E6".."E8", "X9",
 * "beyond-scope". */
cc_status cc_classify(const char* germ_text, char** label_out);

/* ------------------------------------------------------------ verification */

/* suite: "base", "quintic", "quartic", "quadric", "calibration", "properties"
 * or "all". Emits a JSON array of
 *   {"check_id": str, "expected": str, "computed": str, "provenance": str,
 *    "passed": bool}
 * and stores the number of failed checks in *failures_out. */
cc_status cc_verify_json(cc_engine* e, const char* suite, char** json_out, int* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* CURVECOUNT_H */
