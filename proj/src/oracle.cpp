// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include "lta/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "lta/rewriting.hpp"

namespace lta {

namespace {

// states recognizing t, by recursion over the transition lists; epsilon
// edges are chased by plain iteration each time
std::set<State> naive_states(const Lta& a, const Term& t) {
  std::set<State> s;
  if (t.kind() == SymKind::Passive) {
    std::vector<std::set<State>> kid_states;
    for (const auto& k : t.kids()) {
      kid_states.push_back(naive_states(a, k));
      if (kid_states.back().empty()) return s;
    }
    for (const auto& g : a.grounds()) {
      if (g.head != t.sym() || g.args.size() != t.arity()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < g.args.size() && ok; i++)
        ok = kid_states[i].count(g.args[i]) > 0;
      if (ok) s.insert(g.target);
    }
  } else if (auto v = try_eval_interval(t)) {
    if (!v->is_bottom())
      for (const auto& l : a.lambdas())
        if (v->leq(l.value)) s.insert(l.target);
  } else {
    return s;
  }
  bool change = true;
  while (change) {
    change = false;
    for (const auto& e : a.epsilons())
      if (s.count(e.from) && !s.count(e.to)) {
        s.insert(e.to);
        change = true;
      }
  }
  return s;
}

}  // namespace

bool naive_member(const Lta& a, const Term& t) {
  for (const auto& q : naive_states(a, t))
    if (a.finals.count(q)) return true;
  return false;
}

namespace {

std::vector<Term> enum_candidates(const Lta& a, const EnumBounds& b,
                                  bool& truncated) {
  if (b.atom_lo > b.atom_hi)
    throw std::invalid_argument("atom_lo must not exceed atom_hi");
  if (b.max_depth == 0 || b.max_terms == 0)
    throw std::invalid_argument("enumeration bounds must be positive");
  std::vector<Term> pool;
  std::set<Term> seen;
  auto push = [&](const Term& t) {
    if (pool.size() >= b.max_terms) {
      truncated = true;
      return false;
    }
    if (seen.insert(t).second) pool.push_back(t);
    return true;
  };
  for (Int k = b.atom_lo; k <= b.atom_hi; k++)
    if (!push(Term::abs(Interval::atom(k)))) return pool;
  for (std::size_t d = 2; d <= b.max_depth; d++) {
    const std::size_t layer_end = pool.size();
    for (const auto& [head, arity] : a.syms.passive) {
      if (arity == 0) {
        if (!push(Term::app(head, {}))) return pool;
        continue;
      }
      std::vector<std::size_t> idx(arity, 0);
      if (layer_end == 0) continue;
      while (true) {
        std::vector<Term> kids;
        kids.reserve(arity);
        for (int i = 0; i < arity; i++) kids.push_back(pool[idx[i]]);
        if (!push(Term::app(head, std::move(kids)))) return pool;
        int i = arity - 1;
        for (; i >= 0; i--) {
          if (++idx[i] < layer_end) break;
          idx[i] = 0;
        }
        if (i < 0) break;
      }
    }
  }
  return pool;
}

EnumResult enum_filtered(const Lta& a, const EnumBounds& b, bool parallel) {
  EnumResult res;
  std::vector<Term> pool = enum_candidates(a, b, res.truncated);
  std::vector<char> keep(pool.size(), 0);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(pool.size()); i++)
      keep[i] = naive_member(a, pool[i]) ? 1 : 0;
  } else {
    for (std::size_t i = 0; i < pool.size(); i++)
      keep[i] = naive_member(a, pool[i]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < pool.size(); i++)
    if (keep[i]) res.terms.insert(pool[i]);
  return res;
}

}  // namespace

EnumResult enumerate_language(const Lta& a, const EnumBounds& b) {
  return enum_filtered(a, b, true);
}

EnumResult enumerate_language_serial(const Lta& a, const EnumBounds& b) {
  return enum_filtered(a, b, false);
}

namespace {

Trs peano_rules() {
  auto v = [](const char* x) { return Term::var(x); };
  auto s = [](Term t) { return Term::app("succ", {std::move(t)}); };
  auto p = [](Term t) { return Term::app("pred", {std::move(t)}); };
  auto z = []() { return Term::app("zero", {}); };
  auto xadd = [](Term a, Term b) {
    return Term::app("xadd", {std::move(a), std::move(b)});
  };
  auto result = [](Term t) { return Term::app("result", {std::move(t)}); };
  Trs r;
  r.name = "peano";
  r.rules.push_back({xadd(z(), z()), result(z()), {}});
  r.rules.push_back({xadd(s(v("a")), p(v("b"))), xadd(v("a"), v("b")), {}});
  r.rules.push_back({xadd(p(v("a")), s(v("b"))), xadd(v("a"), v("b")), {}});
  r.rules.push_back(
      {xadd(s(v("a")), s(v("b"))), xadd(s(s(v("a"))), v("b")), {}});
  r.rules.push_back(
      {xadd(p(v("a")), p(v("b"))), xadd(p(p(v("a"))), v("b")), {}});
  r.rules.push_back({xadd(s(v("a")), z()), result(s(v("a"))), {}});
  r.rules.push_back({xadd(p(v("a")), z()), result(p(v("a"))), {}});
  r.rules.push_back({xadd(z(), s(v("b"))), result(s(v("b"))), {}});
  r.rules.push_back({xadd(z(), p(v("b"))), result(p(v("b"))), {}});
  return r;
}

Term peano_of(const Int& n) {
  Term t = Term::app("zero", {});
  for (Int i = 0; i < n; i++) t = Term::app("succ", {t});
  return t;
}

Int peano_decode(const Term& t) {
  Int n = 0;
  const Term* cur = &t;
  while (cur->kind() == SymKind::Passive && cur->arity() == 1 &&
         (cur->sym() == "succ" || cur->sym() == "pred")) {
    n += cur->sym() == "succ" ? 1 : -1;
    cur = &cur->kids()[0];
  }
  return n;
}

}  // namespace

PeanoBench peano_benchmark(const Int& x, const Int& y) {
  if (x < 0 || y < 0)
    throw std::invalid_argument("peano benchmark needs nonnegative inputs");
  const Trs r = peano_rules();
  // every redex sits at the root: the rules only rebuild xadd/result there
  Term t = Term::app("xadd", {peano_of(x), peano_of(y)});
  PeanoBench out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& rule : r.rules) {
      TermSubst binding;
      if (!match_term(rule.lhs, t, binding)) continue;
      t = substitute(rule.rhs, binding);
      out.peano_steps++;
      progress = true;
      break;
    }
  }
  out.peano_value = peano_decode(t.kids()[0]);
  Term sum = eval_concrete(Term::op("+", {Term::intconst(x), Term::intconst(y)}));
  out.builtin_steps = 1;
  out.builtin_value = sum.ivalue();
  return out;
}

}  // namespace lta
