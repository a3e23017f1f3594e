// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Conditional term rewriting over the concrete domain: predicates, rules,
// equations, and the one-step / bounded-closure rewriting relation.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lta/term.hpp"

namespace lta {

enum class Relation { Lt, Le, Gt, Ge, Eq, Ne };

std::string relation_symbol(Relation r);
bool relation_holds(Relation r, const Int& a, const Int& b);

// binary comparison of interpreted terms, e.g. x + 1 < 3
struct Predicate {
  Relation rel = Relation::Eq;
  Term lhs;
  Term rhs;

  std::string to_string() const;
  bool operator==(const Predicate& o) const {
    return rel == o.rel && lhs == o.lhs && rhs == o.rhs;
  }
};

// l -> r <= c1 && ... && cn
struct RewriteRule {
  Term lhs;
  Term rhs;
  std::vector<Predicate> conditions;

  std::string to_string() const;
  // nullopt when well-formed, else a diagnostic
  std::optional<std::string> validate() const;
};

// u = v <= c1 && ... && cn
struct Equation {
  Term u;
  Term v;
  std::vector<Predicate> conditions;

  std::string to_string() const;
  std::optional<std::string> validate() const;
};

struct Trs {
  std::string name;
  std::vector<RewriteRule> rules;

  std::optional<std::string> validate() const;
};

struct EquationSet {
  std::string name;
  std::vector<Equation> equations;

  std::optional<std::string> validate() const;
};

// substitute, evaluate both sides; false when a side stays uninterpreted
bool predicate_eval(const Predicate& p, const TermSubst& binding);

// syntactic first-order matching of a passive-and-variable pattern against a
// subject term; variables capture whole subterms
bool match_term(const Term& pattern, const Term& subject, TermSubst& binding);

// all one-step successors of a ground term, eval-normalized
std::set<Term> rewrite_step(const Term& s, const Trs& r);

struct ReachResult {
  std::set<Term> terms;
  bool truncated = false;
};

// BFS closure under rewrite_step, cut off at step_bound levels or once the
// set would exceed size_bound terms
ReachResult reachable(const std::set<Term>& seeds, const Trs& r,
                      std::size_t step_bound, std::size_t size_bound);

}  // namespace lta
