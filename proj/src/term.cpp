// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lta/term.hpp"

#include <stdexcept>

namespace lta {

bool is_builtin_op(const std::string& name) {
  return name == "+" || name == "-" || name == "*" || name == "lub" ||
         name == "glb";
}

int builtin_arity(const std::string& name) {
  return is_builtin_op(name) ? 2 : -1;
}

Term Term::make(Node n) {
  for (const Term& k : n.kids) {
    n.has_var |= k.has_var();
    n.has_int |= k.has_int();
    n.has_abs |= k.has_abs();
    n.has_state |= k.has_state();
  }
  Term t;
  t.p_ = std::make_shared<const Node>(std::move(n));
  return t;
}

Term Term::var(std::string name) {
  Node n;
  n.kind = SymKind::Var;
  n.name = std::move(name);
  n.has_var = true;
  return make(std::move(n));
}

Term Term::intconst(Int k) {
  Node n;
  n.kind = SymKind::IntConst;
  n.ival = std::move(k);
  n.has_int = true;
  return make(std::move(n));
}

Term Term::abs(Interval v) {
  Node n;
  n.kind = SymKind::AbsConst;
  n.aval = std::move(v);
  n.has_abs = true;
  return make(std::move(n));
}

Term Term::state(std::string id) {
  Node n;
  n.kind = SymKind::StateRef;
  n.name = std::move(id);
  n.has_state = true;
  return make(std::move(n));
}

Term Term::app(std::string sym, std::vector<Term> kids) {
  Node n;
  n.kind = SymKind::Passive;
  n.name = std::move(sym);
  n.kids = std::move(kids);
  return make(std::move(n));
}

Term Term::op(std::string op_name, std::vector<Term> kids) {
  if (!is_builtin_op(op_name))
    throw std::invalid_argument("unknown builtin op: " + op_name);
  if (static_cast<int>(kids.size()) != builtin_arity(op_name))
    throw std::invalid_argument("arity mismatch for op " + op_name);
  Node n;
  n.kind = SymKind::Builtin;
  n.name = std::move(op_name);
  n.kids = std::move(kids);
  return make(std::move(n));
}

bool Term::fully_interpreted() const {
  switch (kind()) {
    case SymKind::AbsConst: return true;
    case SymKind::Builtin:
      for (const Term& k : kids())
        if (!k.fully_interpreted()) return false;
      return true;
    default: return false;
  }
}

std::string Term::to_string() const {
  switch (kind()) {
    case SymKind::Var:
    case SymKind::StateRef: return sym();
    case SymKind::IntConst: return ivalue().str();
    case SymKind::AbsConst: return avalue().to_string();
    case SymKind::Builtin: {
      auto wrap = [](const Term& t) {
        std::string s = t.to_string();
        if (t.kind() == SymKind::Builtin && (t.sym() == "+" || t.sym() == "-" ||
                                             t.sym() == "*"))
          return "(" + s + ")";
        return s;
      };
      if (sym() == "lub" || sym() == "glb")
        return sym() + "(" + kids()[0].to_string() + ", " +
               kids()[1].to_string() + ")";
      return wrap(kids()[0]) + " " + sym() + " " + wrap(kids()[1]);
    }
    case SymKind::Passive: {
      if (kids().empty()) return sym();
      std::string s = sym() + "(";
      for (std::size_t i = 0; i < kids().size(); i++) {
        if (i) s += ", ";
        s += kids()[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

bool Term::operator==(const Term& b) const {
  if (p_ == b.p_) return true;
  if (!p_ || !b.p_) return false;
  if (kind() != b.kind()) return false;
  switch (kind()) {
    case SymKind::IntConst: return ivalue() == b.ivalue();
    case SymKind::AbsConst: return avalue() == b.avalue();
    default: break;
  }
  if (sym() != b.sym() || arity() != b.arity()) return false;
  for (std::size_t i = 0; i < arity(); i++)
    if (!(kids()[i] == b.kids()[i])) return false;
  return true;
}

bool Term::operator<(const Term& b) const {
  if (p_ == b.p_) return false;
  if (!p_ || !b.p_) return !p_ && b.p_;
  if (kind() != b.kind()) return kind() < b.kind();
  switch (kind()) {
    case SymKind::IntConst: return ivalue() < b.ivalue();
    case SymKind::AbsConst: return avalue() < b.avalue();
    default: break;
  }
  if (sym() != b.sym()) return sym() < b.sym();
  if (arity() != b.arity()) return arity() < b.arity();
  for (std::size_t i = 0; i < arity(); i++) {
    if (kids()[i] < b.kids()[i]) return true;
    if (b.kids()[i] < kids()[i]) return false;
  }
  return false;
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position cur;
  auto rec = [&](auto&& self, const Term& s) -> void {
    out.push_back(cur);
    for (std::size_t i = 0; i < s.arity(); i++) {
      cur.push_back(i + 1);  // positions index children from 1
      self(self, s.kids()[i]);
      cur.pop_back();
    }
  };
  rec(rec, t);
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p) {
    if (i < 1 || i > cur->arity()) throw std::out_of_range("position off the term");
    cur = &cur->kids()[i - 1];
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& s) {
  if (p.empty()) return s;
  if (p[0] < 1 || p[0] > t.arity()) throw std::out_of_range("position off the term");
  std::vector<Term> kids = t.kids();
  Position rest(p.begin() + 1, p.end());
  kids[p[0] - 1] = replace_at(kids[p[0] - 1], rest, s);
  switch (t.kind()) {
    case SymKind::Passive: return Term::app(t.sym(), std::move(kids));
    case SymKind::Builtin: return Term::op(t.sym(), std::move(kids));
    default: throw std::invalid_argument("replace under a leaf");
  }
}

std::set<std::string> vars(const Term& t) {
  std::set<std::string> out;
  auto rec = [&](auto&& self, const Term& s) -> void {
    if (s.kind() == SymKind::Var) out.insert(s.sym());
    for (const Term& k : s.kids()) self(self, k);
  };
  rec(rec, t);
  return out;
}

Term substitute(const Term& t, const TermSubst& s) {
  switch (t.kind()) {
    case SymKind::Var: {
      auto it = s.find(t.sym());
      return it == s.end() ? t : it->second;
    }
    case SymKind::Passive:
    case SymKind::Builtin: {
      if (!t.has_var()) return t;
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) kids.push_back(substitute(k, s));
      return t.kind() == SymKind::Passive ? Term::app(t.sym(), std::move(kids))
                                          : Term::op(t.sym(), std::move(kids));
    }
    default: return t;
  }
}

Term eval_concrete(const Term& t) {
  switch (t.kind()) {
    case SymKind::Passive: {
      if (t.kids().empty()) return t;
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) kids.push_back(eval_concrete(k));
      return Term::app(t.sym(), std::move(kids));
    }
    case SymKind::Builtin: {
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) kids.push_back(eval_concrete(k));
      if (t.sym() != "lub" && t.sym() != "glb" &&
          kids[0].kind() == SymKind::IntConst &&
          kids[1].kind() == SymKind::IntConst) {
        const Int& a = kids[0].ivalue();
        const Int& b = kids[1].ivalue();
        if (t.sym() == "+") return Term::intconst(a + b);
        if (t.sym() == "-") return Term::intconst(a - b);
        if (t.sym() == "*") return Term::intconst(a * b);
      }
      return Term::op(t.sym(), std::move(kids));
    }
    default: return t;
  }
}

static std::optional<Interval> apply_abstract_op(const std::string& op,
                                                 const Interval& a,
                                                 const Interval& b) {
  if (op == "+") return a.add(b);
  if (op == "-") return a.sub(b);
  if (op == "*") return a.mul(b);
  if (op == "lub") return a.lub(b);
  if (op == "glb") return a.glb(b);
  return std::nullopt;
}

Term eval_abstract(const Term& t) {
  switch (t.kind()) {
    case SymKind::Passive: {
      if (t.kids().empty()) return t;
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) kids.push_back(eval_abstract(k));
      return Term::app(t.sym(), std::move(kids));
    }
    case SymKind::Builtin: {
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) kids.push_back(eval_abstract(k));
      if (kids[0].kind() == SymKind::AbsConst &&
          kids[1].kind() == SymKind::AbsConst) {
        auto r = apply_abstract_op(t.sym(), kids[0].avalue(), kids[1].avalue());
        if (r) return Term::abs(*r);  // bottom propagates like any element
      }
      return Term::op(t.sym(), std::move(kids));
    }
    default: return t;
  }
}

std::optional<Interval> try_eval_interval(const Term& t) {
  switch (t.kind()) {
    case SymKind::AbsConst: return t.avalue();
    case SymKind::Builtin: {
      auto a = try_eval_interval(t.kids()[0]);
      if (!a) return std::nullopt;
      auto b = try_eval_interval(t.kids()[1]);
      if (!b) return std::nullopt;
      return apply_abstract_op(t.sym(), *a, *b);
    }
    default: return std::nullopt;
  }
}

bool term_leq(const Term& a, const Term& b) {
  auto va = try_eval_interval(a);
  auto vb = try_eval_interval(b);
  if (va && vb) return va->leq(*vb);
  if (va || vb) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SymKind::Passive: {
      if (a.sym() != b.sym() || a.arity() != b.arity()) return false;
      for (std::size_t i = 0; i < a.arity(); i++)
        if (!term_leq(a.kids()[i], b.kids()[i])) return false;
      return true;
    }
    case SymKind::Builtin: {
      // interpreted head over non-interpreted children (e.g. x + 1):
      // identical structure compares pointwise
      if (a.sym() != b.sym()) return false;
      for (std::size_t i = 0; i < a.arity(); i++)
        if (!term_leq(a.kids()[i], b.kids()[i])) return false;
      return true;
    }
    case SymKind::Var:
    case SymKind::StateRef: return a.sym() == b.sym();
    case SymKind::IntConst: return a.ivalue() == b.ivalue();
    default: return false;
  }
}

Term term_abstract(const Term& t) {
  switch (t.kind()) {
    case SymKind::IntConst: return Term::abs(alpha(t.ivalue()));
    case SymKind::Passive:
    case SymKind::Builtin: {
      if (!t.has_int()) return t;
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) kids.push_back(term_abstract(k));
      return t.kind() == SymKind::Passive ? Term::app(t.sym(), std::move(kids))
                                          : Term::op(t.sym(), std::move(kids));
    }
    default: return t;
  }
}

std::optional<Term> term_concretize(const Term& t) {
  switch (t.kind()) {
    case SymKind::AbsConst:
      if (!t.avalue().is_atom()) return std::nullopt;
      return Term::intconst(t.avalue().lo().value());
    case SymKind::Passive:
    case SymKind::Builtin: {
      if (!t.has_abs()) return t;
      std::vector<Term> kids;
      kids.reserve(t.arity());
      for (const Term& k : t.kids()) {
        auto c = term_concretize(k);
        if (!c) return std::nullopt;
        kids.push_back(std::move(*c));
      }
      return t.kind() == SymKind::Passive ? Term::app(t.sym(), std::move(kids))
                                          : Term::op(t.sym(), std::move(kids));
    }
    default: return t;
  }
}

}  // namespace lta
