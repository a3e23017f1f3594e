// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lta/interval.hpp"

namespace lta {

// Node kinds. Passive symbols are uninterpreted structure; builtin ops
// (+, -, *, lub, glb) evaluate over the concrete or abstract domain; the
// constant kinds are the two sides of the abstraction boundary. StateRef
// only appears in completion-internal configurations (terms over F u Q).
enum class SymKind { Passive, Builtin, IntConst, AbsConst, Var, StateRef };

bool is_builtin_op(const std::string& name);
int builtin_arity(const std::string& name);

class Term;
using TermSubst = std::map<std::string, Term>;
using Position = std::vector<std::size_t>;

class Term {
 public:
  Term() = default;  // empty; only as a container placeholder

  static Term var(std::string name);
  static Term intconst(Int k);
  static Term abs(Interval v);  // lattice constant, bottom included
  static Term state(std::string id);
  // passive application; arity = kids.size()
  static Term app(std::string sym, std::vector<Term> kids);
  // builtin op application; arity checked against the op table
  static Term op(std::string op_name, std::vector<Term> kids);

  bool empty() const { return !p_; }
  SymKind kind() const { return p_->kind; }
  const std::string& sym() const { return p_->name; }  // Passive/Builtin/Var/StateRef
  const Int& ivalue() const { return p_->ival; }       // IntConst
  const Interval& avalue() const { return p_->aval; }  // AbsConst
  const std::vector<Term>& kids() const { return p_->kids; }
  std::size_t arity() const { return p_->kids.size(); }

  bool has_var() const { return p_->has_var; }
  bool has_int() const { return p_->has_int; }
  bool has_abs() const { return p_->has_abs; }
  bool has_state() const { return p_->has_state; }
  bool ground() const { return !p_->has_var; }
  // true when the term lies in T(F#*): builtin ops over lattice constants
  bool fully_interpreted() const;

  std::string to_string() const;

  bool operator==(const Term& b) const;
  bool operator!=(const Term& b) const { return !(*this == b); }
  bool operator<(const Term& b) const;  // structural; for ordered sets

 private:
  struct Node {
    SymKind kind;
    std::string name;
    Int ival;
    Interval aval;
    std::vector<Term> kids;
    bool has_var = false, has_int = false, has_abs = false, has_state = false;
  };
  std::shared_ptr<const Node> p_;
  static Term make(Node n);
};

// all positions of t in pre-order, starting with the root (empty position);
// child indices count from 1, so f(a,b)|{2} is b
std::vector<Position> positions(const Term& t);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& s);

std::set<std::string> vars(const Term& t);
Term substitute(const Term& t, const TermSubst& s);

// Innermost evaluation of builtin ops over integer constants. Passive
// symbols block the value from propagating upward but evaluation still
// happens underneath them. Ops over anything non-constant stay put.
Term eval_concrete(const Term& t);
// Same shape over the interval domain; lub/glb are abstract-only ops.
Term eval_abstract(const Term& t);

// eval# of a fully interpreted term (abstract constants + builtin ops)
std::optional<Interval> try_eval_interval(const Term& t);

// Def. 2 term order: fully interpreted sides compare by eval#, passive
// structure compares pointwise, everything else is incomparable.
bool term_leq(const Term& a, const Term& b);

// abstraction boundary helpers: map integer constants to atoms and back
Term term_abstract(const Term& t);
std::optional<Term> term_concretize(const Term& t);  // fails on non-atoms

}  // namespace lta
