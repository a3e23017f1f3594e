// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>

#include "lta/automaton.hpp"
#include "lta/partitioned.hpp"

namespace lta {

Lta eliminate_epsilons(const Lta& a) {
  Lta out;
  out.name = a.name;
  out.syms = a.syms;
  out.states = a.states;
  out.finals = a.finals;
  auto clo = a.eps_closure();
  for (const auto& l : a.lambdas())
    for (const auto& q : clo.at(l.target)) out.add_lambda(l.value, q);
  for (const auto& g : a.grounds())
    for (const auto& q : clo.at(g.target)) out.add_ground(g.head, g.args, q);
  return out;
}

namespace {

// rename b's states away from a's
std::map<State, State, NaturalLess> disjoint_renaming(const Lta& a,
                                                      const Lta& b) {
  std::map<State, State, NaturalLess> ren;
  StateSet taken = a.states;
  for (const auto& q : b.states) {
    State r = q;
    while (taken.count(r)) r += "'";
    taken.insert(r);
    ren[q] = r;
  }
  return ren;
}

}  // namespace

Lta lta_union(const Lta& a, const Lta& b) {
  Lta out = a;
  out.name = a.name + "_or_" + b.name;
  out.syms.merge(b.syms);
  auto ren = disjoint_renaming(a, b);
  for (const auto& q : b.states) out.add_state(ren.at(q));
  for (const auto& q : b.finals) out.add_final(ren.at(q));
  for (const auto& l : b.lambdas()) out.add_lambda(l.value, ren.at(l.target));
  for (const auto& g : b.grounds()) {
    std::vector<State> args;
    args.reserve(g.args.size());
    for (const auto& q : g.args) args.push_back(ren.at(q));
    out.add_ground(g.head, std::move(args), ren.at(g.target));
  }
  for (const auto& e : b.epsilons()) out.add_epsilon(ren.at(e.from), ren.at(e.to));
  return out;
}

Lta intersection(const Lta& a0, const Lta& b0) {
  Lta a = eliminate_epsilons(a0);
  Lta b = eliminate_epsilons(b0);
  Lta out;
  out.name = a.name + "_and_" + b.name;
  out.syms = a.syms;
  out.syms.merge(b.syms);
  auto pair_name = [](const State& p, const State& q) { return p + "." + q; };
  for (const auto& la : a.lambdas())
    for (const auto& lb : b.lambdas()) {
      Interval m = la.value.glb(lb.value);
      if (!m.is_bottom())
        out.add_lambda(std::move(m), pair_name(la.target, lb.target));
    }
  for (const auto& ga : a.grounds())
    for (const auto& gb : b.grounds()) {
      if (ga.head != gb.head || ga.args.size() != gb.args.size()) continue;
      std::vector<State> args;
      args.reserve(ga.args.size());
      for (std::size_t i = 0; i < ga.args.size(); i++)
        args.push_back(pair_name(ga.args[i], gb.args[i]));
      out.add_ground(ga.head, std::move(args), pair_name(ga.target, gb.target));
    }
  for (const auto& p : a.finals)
    for (const auto& q : b.finals) {
      State s = pair_name(p, q);
      if (out.states.count(s)) out.add_final(s);
    }
  return reduce(out);
}

Lta reduce(const Lta& a) {
  StateSet marked;
  bool change = true;
  while (change) {
    change = false;
    for (const auto& l : a.lambdas())
      if (!marked.count(l.target)) {
        marked.insert(l.target);
        change = true;
      }
    for (const auto& g : a.grounds()) {
      if (marked.count(g.target)) continue;
      bool ok = true;
      for (const auto& q : g.args)
        if (!marked.count(q)) {
          ok = false;
          break;
        }
      if (ok) {
        marked.insert(g.target);
        change = true;
      }
    }
    for (const auto& e : a.epsilons())
      if (marked.count(e.from) && !marked.count(e.to)) {
        marked.insert(e.to);
        change = true;
      }
  }
  Lta out;
  out.name = a.name;
  out.syms = a.syms;
  out.states = marked;
  for (const auto& q : a.finals)
    if (marked.count(q)) out.add_final(q);
  for (const auto& l : a.lambdas()) out.add_lambda(l.value, l.target);
  for (const auto& g : a.grounds()) {
    bool ok = marked.count(g.target) > 0;
    for (const auto& q : g.args) ok = ok && marked.count(q);
    if (ok) out.add_ground(g.head, g.args, g.target);
  }
  for (const auto& e : a.epsilons())
    if (marked.count(e.from) && marked.count(e.to))
      out.add_epsilon(e.from, e.to);
  // dropping inaccessible-arg transitions may orphan states; marked set is
  // exactly the accessible ones, so restrict the state set to it
  out.states = marked;
  return out;
}

bool is_empty(const Lta& a) { return reduce(a).finals.empty(); }

bool is_deterministic(const Lta& a) {
  if (!a.epsilons().empty()) return false;
  const auto& gs = a.grounds();
  for (std::size_t i = 0; i + 1 < gs.size(); i++)
    if (gs[i].head == gs[i + 1].head && gs[i].args == gs[i + 1].args)
      return false;  // sorted, equal lhs are adjacent up to target ordering
  for (std::size_t i = 0; i < gs.size(); i++)
    for (std::size_t j = i + 1; j < gs.size(); j++)
      if (gs[i].head == gs[j].head && gs[i].args == gs[j].args &&
          gs[i].target != gs[j].target)
        return false;
  const auto& ls = a.lambdas();
  for (std::size_t i = 0; i < ls.size(); i++)
    for (std::size_t j = i + 1; j < ls.size(); j++)
      if (ls[i].target != ls[j].target &&
          !ls[i].value.glb(ls[j].value).is_bottom())
        return false;
  return true;
}

namespace {

// gaps of the union of values inside one block
std::vector<Interval> uncovered_in(const Interval& block,
                                   std::vector<Interval> covered) {
  std::sort(covered.begin(), covered.end());
  std::vector<Interval> gaps;
  Bound cursor = block.lo();  // next value still uncovered
  for (const auto& v : covered) {
    if (cursor < v.lo()) {
      Bound up = v.lo().finite() ? Bound::of(v.lo().value() - 1) : v.lo();
      Interval gap = Interval::of(cursor, up);
      if (!gap.is_bottom()) gaps.push_back(gap);
    }
    if (!v.hi().finite()) return gaps;  // covered to +inf
    Bound next = Bound::of(v.hi().value() + 1);
    if (cursor < next) cursor = next;
  }
  Interval tail = Interval::of(cursor, block.hi());
  if (!tail.is_bottom()) gaps.push_back(tail);
  return gaps;
}

}  // namespace

Lta complement(const Lta& a, const Partition& p) {
  if (!a.epsilons().empty())
    throw EngineError("complement needs an epsilon-free automaton");
  if (!is_deterministic(a))
    throw EngineError("complement needs a deterministic automaton");
  Lta out = a;
  out.name = "not_" + a.name;
  State sink = a.fresh_state("qsink");
  out.add_state(sink);
  // lambda side: route every uncovered value to the sink, blockwise
  for (std::size_t bi = 0; bi < p.blocks().size(); bi++) {
    std::vector<Interval> covered;
    for (const auto& l : a.lambdas()) {
      Interval m = l.value.glb(p.blocks()[bi]);
      if (!m.is_bottom()) covered.push_back(std::move(m));
    }
    for (auto& gap : uncovered_in(p.blocks()[bi], std::move(covered)))
      out.add_lambda(std::move(gap), sink);
  }
  // ground side: every missing left-hand side over states + sink
  std::vector<State> all(out.states.begin(), out.states.end());
  std::vector<std::pair<std::string, int>> heads(a.syms.passive.begin(),
                                                 a.syms.passive.end());
  heads.insert(heads.end(), a.syms.builtins.begin(), a.syms.builtins.end());
  for (const auto& [head, arity] : heads) {
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      std::vector<State> args;
      args.reserve(arity);
      for (int i = 0; i < arity; i++) args.push_back(all[idx[i]]);
      if (out.ground_targets(head, args).empty())
        out.add_ground(head, std::move(args), sink);
      int i = arity - 1;
      for (; i >= 0; i--) {
        if (++idx[i] < all.size()) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
  }
  StateSet flipped;
  for (const auto& q : out.states)
    if (!a.finals.count(q)) flipped.insert(q);
  out.finals = std::move(flipped);
  return out;
}

std::optional<Term> sample_member(const Lta& a) {
  std::map<State, Term> wit;
  // builtin-headed transitions are skipped: after evaluation their targets
  // carry lambda transitions of their own
  bool change = true;
  while (change) {
    change = false;
    for (const auto& l : a.lambdas()) {
      if (wit.count(l.target)) continue;
      Int rep = 0;
      if (l.value.lo().finite())
        rep = l.value.lo().value();
      else if (l.value.hi().finite())
        rep = l.value.hi().value();
      wit.emplace(l.target, Term::intconst(rep));
      change = true;
    }
    for (const auto& g : a.grounds()) {
      if (wit.count(g.target) || a.syms.builtins.count(g.head)) continue;
      std::vector<Term> kids;
      for (const auto& q : g.args) {
        auto it = wit.find(q);
        if (it == wit.end()) break;
        kids.push_back(it->second);
      }
      if (kids.size() != g.args.size()) continue;
      wit.emplace(g.target, Term::app(g.head, std::move(kids)));
      change = true;
    }
    for (const auto& e : a.epsilons()) {
      if (wit.count(e.to) || !wit.count(e.from)) continue;
      wit.emplace(e.to, wit.at(e.from));
      change = true;
    }
  }
  for (const auto& q : a.finals)
    if (auto it = wit.find(q); it != wit.end()) return it->second;
  return std::nullopt;
}

InclusionResult included_in(const Lta& a, const Lta& b, const Partition& p) {
  Lta be = eliminate_epsilons(b);
  // determinization preserves the language only when nothing needs fusing:
  // already deterministic and at most one lambda value per block
  bool exact = is_deterministic(be) && b.epsilons().empty();
  if (exact) {
    for (std::size_t bi = 0; bi < p.blocks().size() && exact; bi++) {
      int n = 0;
      for (const auto& l : be.lambdas())
        if (!l.value.glb(p.blocks()[bi]).is_bottom()) n++;
      exact = n <= 1;
    }
  }
  Plta bp = to_plta(be, p);
  Lta bd = determinize(bp).base;
  Lta cd = complement(bd, p);
  Lta probe = intersection(eliminate_epsilons(a), cd);
  InclusionResult r;
  r.included = is_empty(probe);
  r.approximate = !exact;
  return r;
}

}  // namespace lta
