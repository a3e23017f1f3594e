// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lta/automaton.hpp"

#include <algorithm>

namespace lta {

std::optional<int> SymbolTable::arity_of(const std::string& name) const {
  if (auto it = passive.find(name); it != passive.end()) return it->second;
  if (auto it = builtins.find(name); it != builtins.end()) return it->second;
  return std::nullopt;
}

void SymbolTable::merge(const SymbolTable& other) {
  for (const auto& [n, a] : other.passive) {
    auto [it, fresh] = passive.emplace(n, a);
    if (!fresh && it->second != a)
      throw EngineError("symbol " + n + " declared with arities " +
                        std::to_string(it->second) + " and " + std::to_string(a));
  }
  for (const auto& [n, a] : other.builtins) {
    auto [it, fresh] = builtins.emplace(n, a);
    if (!fresh && it->second != a)
      throw EngineError("builtin " + n + " declared with arities " +
                        std::to_string(it->second) + " and " + std::to_string(a));
  }
}

bool GroundTr::operator<(const GroundTr& b) const {
  if (head != b.head) return head < b.head;
  if (args.size() != b.args.size()) return args.size() < b.args.size();
  for (std::size_t i = 0; i < args.size(); i++) {
    if (natural_less(args[i], b.args[i])) return true;
    if (natural_less(b.args[i], args[i])) return false;
  }
  return natural_less(target, b.target);
}

template <class T>
static void insert_sorted(std::vector<T>& v, T x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return;
  v.insert(it, std::move(x));
}

void Lta::add_final(const State& q) {
  states.insert(q);
  finals.insert(q);
}

void Lta::add_lambda(Interval v, State target) {
  if (v.is_bottom()) throw EngineError("bottom Lambda value");
  states.insert(target);
  insert_sorted(lambdas_, LambdaTr{std::move(v), std::move(target)});
}

void Lta::add_ground(std::string head, std::vector<State> args, State target) {
  for (const auto& q : args) states.insert(q);
  states.insert(target);
  insert_sorted(grounds_,
                GroundTr{std::move(head), std::move(args), std::move(target)});
}

void Lta::add_epsilon(State from, State to) {
  if (from == to) return;
  states.insert(from);
  states.insert(to);
  insert_sorted(epsilons_, EpsTr{std::move(from), std::move(to)});
}

bool Lta::has_ground(const std::string& head, const std::vector<State>& args,
                     const State& target) const {
  GroundTr probe{head, args, target};
  auto it = std::lower_bound(grounds_.begin(), grounds_.end(), probe);
  return it != grounds_.end() && *it == probe;
}

std::vector<State> Lta::ground_targets(const std::string& head,
                                       const std::vector<State>& args) const {
  std::vector<State> out;
  for (const auto& g : grounds_)
    if (g.head == head && g.args == args) out.push_back(g.target);
  return out;
}

void Lta::remove_lambdas_of(const State& target) {
  std::erase_if(lambdas_, [&](const LambdaTr& l) { return l.target == target; });
}

void Lta::merge_states(const State& q1, const State& q2) {
  if (q1 == q2) return;
  auto ren = [&](const State& q) { return q == q2 ? q1 : q; };
  std::vector<LambdaTr> ls;
  for (auto& l : lambdas_) insert_sorted(ls, LambdaTr{l.value, ren(l.target)});
  lambdas_ = std::move(ls);
  std::vector<GroundTr> gs;
  for (auto& g : grounds_) {
    GroundTr ng{g.head, {}, ren(g.target)};
    ng.args.reserve(g.args.size());
    for (const auto& q : g.args) ng.args.push_back(ren(q));
    insert_sorted(gs, std::move(ng));
  }
  grounds_ = std::move(gs);
  std::vector<EpsTr> es;
  for (auto& e : epsilons_) {
    EpsTr ne{ren(e.from), ren(e.to)};
    if (ne.from != ne.to) insert_sorted(es, std::move(ne));
  }
  epsilons_ = std::move(es);
  states.erase(q2);
  if (finals.erase(q2)) finals.insert(q1);
}

State Lta::fresh_state(const std::string& base) const {
  State q = base;
  while (states.count(q)) q += "'";
  return q;
}

std::map<State, StateSet, NaturalLess> Lta::eps_closure() const {
  std::map<State, StateSet, NaturalLess> clo;
  for (const auto& q : states) clo[q] = {q};
  bool change = true;
  while (change) {
    change = false;
    for (const auto& e : epsilons_) {
      auto& from = clo[e.from];
      std::size_t before = from.size();
      const auto& to = clo[e.to];
      from.insert(to.begin(), to.end());
      change |= from.size() != before;
    }
  }
  return clo;
}

std::optional<std::string> Lta::validate() const {
  for (const auto& q : finals)
    if (!states.count(q)) return "final state " + q + " not declared";
  for (const auto& g : grounds_) {
    auto ar = syms.arity_of(g.head);
    if (!ar) return "symbol " + g.head + " not in the alphabet";
    if (*ar != static_cast<int>(g.args.size()))
      return "symbol " + g.head + " used with arity " +
             std::to_string(g.args.size()) + ", declared " + std::to_string(*ar);
  }
  return std::nullopt;
}

namespace {

struct ReachCtx {
  const Lta& a;
  const std::map<State, StateSet, NaturalLess>& clo;
  std::map<Term, StateSet> memo;

  const StateSet& closure_of(const State& q) {
    static const StateSet empty;
    auto it = clo.find(q);
    return it == clo.end() ? empty : it->second;
  }

  StateSet run(const Term& t) {
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    StateSet out;
    if (t.kind() == SymKind::StateRef) {
      out = closure_of(t.sym());
    } else {
      std::optional<Interval> v;
      if (t.kind() == SymKind::IntConst)
        v = alpha(t.ivalue());
      else
        v = try_eval_interval(t);
      if (v) {
        for (const auto& l : a.lambdas())
          if (v->leq(l.value)) {
            const auto& c = closure_of(l.target);
            out.insert(c.begin(), c.end());
          }
      }
      if (t.kind() == SymKind::Passive || t.kind() == SymKind::Builtin) {
        std::vector<StateSet> kid_states;
        kid_states.reserve(t.arity());
        for (const Term& k : t.kids()) kid_states.push_back(run(k));
        for (const auto& g : a.grounds()) {
          if (g.head != t.sym() || g.args.size() != t.arity()) continue;
          bool ok = true;
          for (std::size_t i = 0; i < g.args.size() && ok; i++)
            ok = kid_states[i].count(g.args[i]) > 0;
          if (ok) {
            const auto& c = closure_of(g.target);
            out.insert(c.begin(), c.end());
          }
        }
      }
    }
    memo.emplace(t, out);
    return out;
  }
};

}  // namespace

StateSet Lta::reaches(const Term& t) const {
  return reaches(t, eps_closure());
}

StateSet Lta::reaches(const Term& t, const EpsClosure& clo) const {
  ReachCtx ctx{*this, clo, {}};
  return ctx.run(t);
}

bool Lta::member(const Term& t) const {
  auto check = [](auto&& self, const Term& s) -> void {
    switch (s.kind()) {
      case SymKind::Var: throw std::invalid_argument("member on open term");
      case SymKind::StateRef:
        throw std::invalid_argument("member on a configuration");
      case SymKind::IntConst:
        throw std::invalid_argument(
            "member on a concrete term; abstract it first");
      case SymKind::AbsConst:
        if (!s.avalue().is_atom())
          throw std::invalid_argument("member needs atom leaves, got " +
                                      s.avalue().to_string());
        return;
      default:
        for (const Term& k : s.kids()) self(self, k);
    }
  };
  check(check, t);
  StateSet r = reaches(t);
  for (const auto& q : r)
    if (finals.count(q)) return true;
  return false;
}

}  // namespace lta
