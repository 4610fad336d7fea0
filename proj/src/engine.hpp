/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef CURVECOUNT_ENGINE_HPP
#define CURVECOUNT_ENGINE_HPP

#include <map>
#include <vector>

#include "chern.hpp"
#include "singularity.hpp"

namespace curvecount {

// Memoized evaluator for the numbers N(A_1^delta X, n1, m1, m2[, theta]) as
// universal polynomials in the four intersection generators.
//
// Evaluation is single-threaded; the memo table is the only mutable state and a
// stored value never changes. Results are immutable value types and freely
// transferable between threads once computed.
class Engine {
 public:
  // Memoized, deterministic. Dispatch: hat flavor -> hat reduction; proj A1 with
  // theta >= 2 -> theta reduction; proj -> the matching theorem (D4 handles its
  // theta branches itself); plain A1 -> base case / append-node rule; any other
  // plain -> 1/deg(pi) times the proj count at theta = 0.
  //
  // Throws UnresolvableQuery when a (sub-)query needs a plain or hat number with
  // delta + codim > 8; nothing in the delta + codim <= 8 table reaches one.
  const ChernPolynomial& count(const Query& q);

  // Divides an ordered count by (delta+1)! when the distinguished singularity is
  // itself a node, by delta! otherwise.
  ChernPolynomial unordered_count(const Query& q);

  struct TableEntry {
    int delta;
    Sing sing;
    ChernPolynomial poly;  // unordered universal polynomial
  };
  // Every unordered N(A_1^delta X) with delta + codim(X) <= 8; for X = A1 the
  // entry is the (delta+1)-nodal count. Fixed ordering: delta ascending, then
  // A1..A8, D4..D8, E6..E8, X9.
  std::vector<TableEntry> build_table();

  size_t memo_size() const { return memo_.size(); }
  // Canonical text of the memo table; two independent engines that evaluated the
  // same queries produce identical dumps.
  std::string memo_dump() const;

  // The eighteen singularities a table entry may carry, in output order.
  static const std::vector<Sing>& table_sings();


 private:
  ChernPolynomial evaluate(const Query& q);

  ChernPolynomial base_nodal(int n1, int m1, int m2);
  ChernPolynomial rule_append_node(const Query& q);
  ChernPolynomial rule_pa1(const Query& q);
  ChernPolynomial rule_pd4(const Query& q);
  ChernPolynomial rule_proj_chain(const Query& q);
  ChernPolynomial proj_theta_reduce(const Query& q);
  ChernPolynomial hat_reduce(const Query& q);
  ChernPolynomial plain_from_proj(const Query& q);

  std::map<Query, ChernPolynomial> memo_;
  std::vector<Measure> stack_;  // in-flight measures; enforces the termination order
};

}  // namespace curvecount

#endif
