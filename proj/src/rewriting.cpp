// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include "lta/rewriting.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace lta {

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
  }
  return "?";
}

bool relation_holds(Relation r, const Int& a, const Int& b) {
  switch (r) {
    case Relation::Lt: return a < b;
    case Relation::Le: return a <= b;
    case Relation::Gt: return a > b;
    case Relation::Ge: return a >= b;
    case Relation::Eq: return a == b;
    case Relation::Ne: return a != b;
  }
  return false;
}

std::string Predicate::to_string() const {
  return lhs.to_string() + " " + relation_symbol(rel) + " " + rhs.to_string();
}

namespace {

std::string conditions_suffix(const std::vector<Predicate>& cs) {
  if (cs.empty()) return "";
  std::string out = " <= ";
  for (std::size_t i = 0; i < cs.size(); i++) {
    if (i) out += " && ";
    out += cs[i].to_string();
  }
  return out;
}

// interpreted predicate side: variables and integers combined with + - *
std::optional<std::string> check_interpreted(const Term& t) {
  switch (t.kind()) {
    case SymKind::Var:
    case SymKind::IntConst:
      return std::nullopt;
    case SymKind::Builtin:
      if (t.sym() == "lub" || t.sym() == "glb")
        return "lattice operation '" + t.sym() + "' not allowed in conditions";
      for (const auto& k : t.kids())
        if (auto e = check_interpreted(k)) return e;
      return std::nullopt;
    default:
      return "condition contains non-arithmetic subterm '" + t.to_string() +
             "'";
  }
}

std::optional<std::string> check_conditions(const std::vector<Predicate>& cs,
                                            const std::set<std::string>& scope,
                                            const std::string& what) {
  for (const auto& c : cs) {
    if (auto e = check_interpreted(c.lhs)) return e;
    if (auto e = check_interpreted(c.rhs)) return e;
    for (const auto& side : {c.lhs, c.rhs})
      for (const auto& x : vars(side))
        if (!scope.count(x))
          return "condition variable '" + x + "' not bound by " + what;
  }
  return std::nullopt;
}

bool linear_pattern(const Term& t, std::set<std::string>& seen) {
  if (t.kind() == SymKind::Var) return seen.insert(t.sym()).second;
  for (const auto& k : t.kids())
    if (!linear_pattern(k, seen)) return false;
  return true;
}

bool passive_pattern(const Term& t) {
  if (t.kind() == SymKind::Var) return true;
  if (t.kind() != SymKind::Passive) return false;
  for (const auto& k : t.kids())
    if (!passive_pattern(k)) return false;
  return true;
}

bool concrete_side(const Term& t) {
  switch (t.kind()) {
    case SymKind::Var:
    case SymKind::IntConst:
      return true;
    case SymKind::Passive:
    case SymKind::Builtin:
      for (const auto& k : t.kids())
        if (!concrete_side(k)) return false;
      return true;
    default:
      return false;  // states and abstract constants live in automata only
  }
}

}  // namespace

std::string RewriteRule::to_string() const {
  return lhs.to_string() + " -> " + rhs.to_string() +
         conditions_suffix(conditions);
}

std::optional<std::string> RewriteRule::validate() const {
  if (lhs.kind() == SymKind::Var)
    return "left-hand side must not be a variable";
  if (!passive_pattern(lhs))
    return "left-hand side must use passive symbols and variables only";
  std::set<std::string> seen;
  if (!linear_pattern(lhs, seen))
    return "left-hand side must be linear (no repeated variable)";
  if (!concrete_side(rhs))
    return "right-hand side contains a non-concrete symbol";
  const std::set<std::string> lv = vars(lhs);
  for (const auto& x : vars(rhs))
    if (!lv.count(x))
      return "right-hand side variable '" + x + "' not bound on the left";
  return check_conditions(conditions, lv, "the left-hand side");
}

std::string Equation::to_string() const {
  return u.to_string() + " = " + v.to_string() + conditions_suffix(conditions);
}

std::optional<std::string> Equation::validate() const {
  if (!concrete_side(u) || !concrete_side(v))
    return "equation sides must be concrete terms";
  std::set<std::string> scope = vars(u);
  for (const auto& x : vars(v)) scope.insert(x);
  return check_conditions(conditions, scope, "the equation");
}

std::optional<std::string> Trs::validate() const {
  for (std::size_t i = 0; i < rules.size(); i++)
    if (auto e = rules[i].validate())
      return "rule " + std::to_string(i + 1) + " (" + rules[i].to_string() +
             "): " + *e;
  return std::nullopt;
}

std::optional<std::string> EquationSet::validate() const {
  for (std::size_t i = 0; i < equations.size(); i++)
    if (auto e = equations[i].validate())
      return "equation " + std::to_string(i + 1) + " (" +
             equations[i].to_string() + "): " + *e;
  return std::nullopt;
}

bool predicate_eval(const Predicate& p, const TermSubst& binding) {
  Term a = eval_concrete(substitute(p.lhs, binding));
  Term b = eval_concrete(substitute(p.rhs, binding));
  if (a.kind() != SymKind::IntConst || b.kind() != SymKind::IntConst)
    return false;
  return relation_holds(p.rel, a.ivalue(), b.ivalue());
}

bool match_term(const Term& pattern, const Term& subject, TermSubst& binding) {
  switch (pattern.kind()) {
    case SymKind::Var: {
      auto it = binding.find(pattern.sym());
      if (it != binding.end()) return it->second == subject;
      binding.emplace(pattern.sym(), subject);
      return true;
    }
    case SymKind::IntConst:
      return subject.kind() == SymKind::IntConst &&
             subject.ivalue() == pattern.ivalue();
    case SymKind::AbsConst:
      return subject.kind() == SymKind::AbsConst &&
             subject.avalue() == pattern.avalue();
    case SymKind::StateRef:
      return subject.kind() == SymKind::StateRef &&
             subject.sym() == pattern.sym();
    default:
      if (subject.kind() != pattern.kind() || subject.sym() != pattern.sym() ||
          subject.arity() != pattern.arity())
        return false;
      for (std::size_t i = 0; i < pattern.arity(); i++)
        if (!match_term(pattern.kids()[i], subject.kids()[i], binding))
          return false;
      return true;
  }
}

std::set<Term> rewrite_step(const Term& s, const Trs& r) {
  std::set<Term> out;
  for (const auto& p : positions(s)) {
    const Term& sub = subterm_at(s, p);
    for (const auto& rule : r.rules) {
      TermSubst binding;
      if (!match_term(rule.lhs, sub, binding)) continue;
      bool ok = true;
      for (const auto& c : rule.conditions)
        if (!predicate_eval(c, binding)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      out.insert(eval_concrete(replace_at(s, p, substitute(rule.rhs, binding))));
    }
  }
  return out;
}

ReachResult reachable(const std::set<Term>& seeds, const Trs& r,
                      std::size_t step_bound, std::size_t size_bound) {
  ReachResult res;
  res.terms = seeds;
  std::deque<Term> frontier(seeds.begin(), seeds.end());
  for (std::size_t step = 0; step < step_bound && !frontier.empty(); step++) {
    std::deque<Term> next;
    for (const auto& t : frontier) {
      for (const auto& succ : rewrite_step(t, r)) {
        if (res.terms.count(succ)) continue;
        if (res.terms.size() >= size_bound) {
          res.truncated = true;
          return res;
        }
        res.terms.insert(succ);
        next.push_back(succ);
      }
    }
    frontier = std::move(next);
  }
  if (!frontier.empty()) res.truncated = true;
  return res;
}

}  // namespace lta
