// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include "lta/completion.hpp"

#include <algorithm>

namespace lta {

namespace {

std::size_t tr_count(const Lta& a) {
  return a.lambdas().size() + a.grounds().size() + a.epsilons().size();
}

std::string set_str(const StateSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& q : s) {
    if (!first) out += ",";
    out += q;
    first = false;
  }
  return out + "}";
}

// bracket-balanced even for infinite bounds, so names stay parseable
std::string value_state_name(const Interval& v) {
  auto side = [](const Bound& b, bool low) {
    if (b.finite()) return b.value().str();
    return std::string(low ? "-inf" : "+inf");
  };
  return "q[" + side(v.lo(), true) + "," + side(v.hi(), false) + "]";
}

Interval eval_op(const std::string& op, const Interval& a, const Interval& b) {
  if (op == "+") return a.add(b);
  if (op == "-") return a.sub(b);
  if (op == "*") return a.mul(b);
  if (op == "lub") return a.lub(b);
  if (op == "glb") return a.glb(b);
  throw EngineError("unknown builtin operation '" + op + "'");
}

}  // namespace

State CompletionState::fresh() {
  while (true) {
    State s = "q!" + std::to_string(fresh_counter++);
    if (!current.states.count(s)) return s;
  }
}

State CompletionState::value_state(const Interval& v) {
  State q;
  if (auto it = value_states.find(v); it != value_states.end()) {
    q = it->second;
  } else {
    q = current.fresh_state(value_state_name(v));
    value_states.emplace(v, q);
  }
  // the defining transition may be missing on first use or after a merge
  for (const auto& l : current.lambdas())
    if (l.target == q && l.value == v) return q;
  current.add_lambda(v, q);
  return q;
}

std::vector<TermSubst> omega(const Lta& a, const RewriteRule& rule,
                             const State& q, SolverMode mode,
                             const EpsClosure& closure) {
  std::set<TermSubst> uniq;
  ConstraintSystem cs{rule.conditions};
  for (const auto& m : matching(rule.lhs, a, q, closure)) {
    for (const auto& sol : solve(m, a, cs, mode, closure)) {
      TermSubst subst;
      for (const auto& [x, qs] : sol.states) subst.emplace(x, Term::state(qs));
      for (const auto& [x, sv] : sol.solved)
        subst.emplace(x, sv.value == sv.from ? Term::state(sv.state)
                                             : Term::abs(sv.value));
      if (a.reaches(substitute(rule.rhs, subst), closure).count(q))
        continue;  // rhs instance already recognized at q
      uniq.insert(std::move(subst));
    }
  }
  return {uniq.begin(), uniq.end()};
}

std::vector<TermSubst> omega(const Lta& a, const RewriteRule& rule,
                             const State& q, SolverMode mode) {
  return omega(a, rule, q, mode, a.eps_closure());
}

namespace {

std::vector<CriticalPair> pairs_at(const Lta& a, const Trs& r, std::size_t ri,
                                   const State& q, SolverMode mode,
                                   const EpsClosure& closure) {
  std::vector<CriticalPair> out;
  for (auto& s : omega(a, r.rules[ri], q, mode, closure))
    out.push_back({ri, q, std::move(s)});
  return out;
}

}  // namespace

std::vector<CriticalPair> critical_pairs_serial(const Lta& a, const Trs& r,
                                                SolverMode mode) {
  const EpsClosure closure = a.eps_closure();
  std::vector<CriticalPair> out;
  for (std::size_t ri = 0; ri < r.rules.size(); ri++)
    for (const auto& q : a.states)
      for (auto& p : pairs_at(a, r, ri, q, mode, closure))
        out.push_back(std::move(p));
  return out;
}

std::vector<CriticalPair> critical_pairs(const Lta& a, const Trs& r,
                                         SolverMode mode) {
  const EpsClosure closure = a.eps_closure();
  const std::vector<State> qs(a.states.begin(), a.states.end());
  const std::size_t n = r.rules.size() * qs.size();
  std::vector<std::vector<CriticalPair>> cells(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(n); i++) {
    const std::size_t ri = static_cast<std::size_t>(i) / qs.size();
    const std::size_t qi = static_cast<std::size_t>(i) % qs.size();
    cells[i] = pairs_at(a, r, ri, qs[qi], mode, closure);
  }
  std::vector<CriticalPair> out;
  for (auto& c : cells)
    for (auto& p : c) out.push_back(std::move(p));
  return out;
}

namespace {

State resolve(const Term& t, CompletionState& st) {
  switch (t.kind()) {
    case SymKind::StateRef:
      return t.sym();
    case SymKind::IntConst:
      return st.value_state(alpha(t.ivalue()));
    case SymKind::AbsConst:
      return st.value_state(t.avalue());
    case SymKind::Passive:
    case SymKind::Builtin: {
      std::vector<State> args;
      args.reserve(t.arity());
      for (const auto& k : t.kids()) args.push_back(resolve(k, st));
      const auto reuse = st.current.ground_targets(t.sym(), args);
      if (!reuse.empty()) return reuse.front();
      State q = st.fresh();
      st.current.add_ground(t.sym(), std::move(args), q);
      return q;
    }
    default:
      throw EngineError("normalize hit an unbound variable '" + t.sym() + "'");
  }
}

}  // namespace

void normalize(const Term& rhs_instance, const State& target,
               CompletionState& st) {
  switch (rhs_instance.kind()) {
    case SymKind::IntConst:
      st.current.add_lambda(alpha(rhs_instance.ivalue()), target);
      return;
    case SymKind::AbsConst:
      st.current.add_lambda(rhs_instance.avalue(), target);
      return;
    case SymKind::StateRef:
      st.current.add_epsilon(rhs_instance.sym(), target);
      return;
    case SymKind::Passive:
    case SymKind::Builtin: {
      std::vector<State> args;
      args.reserve(rhs_instance.arity());
      for (const auto& k : rhs_instance.kids()) args.push_back(resolve(k, st));
      st.current.add_ground(rhs_instance.sym(), std::move(args), target);
      return;
    }
    default:
      throw EngineError("normalize hit an unbound variable '" +
                        rhs_instance.sym() + "'");
  }
}

Lta one_step(const Lta& a, const Trs& r, CompletionState& st,
             SolverMode mode) {
  st.current = a;
  const std::size_t before = tr_count(a);
  const auto pairs = critical_pairs(a, r, mode);
  for (const auto& p : pairs) {
    State qp = st.fresh();
    normalize(substitute(r.rules[p.rule_index].rhs, p.sigma), qp, st);
    st.current.add_epsilon(qp, p.target);
  }
  st.trace.push_back("step " + std::to_string(st.step) + " completion: " +
                     std::to_string(pairs.size()) + " pairs, +" +
                     std::to_string(tr_count(st.current) - before) +
                     " transitions");
  return st.current;
}

Lta apply_equations(const Lta& a, const EquationSet& e, CompletionState& st,
                    SolverMode mode) {
  st.current = a;
  std::vector<std::string> merges;
  // survivor, victim of the first merge in canonical scan order
  auto find_merge = [&]() -> std::optional<std::pair<State, State>> {
    const EpsClosure closure = st.current.eps_closure();
    for (const auto& eq : e.equations) {
      const Term au = term_abstract(eq.u);
      const Term av = term_abstract(eq.v);
      const ConstraintSystem cs{eq.conditions};
      const std::vector<State> qs(st.current.states.begin(),
                                  st.current.states.end());
      for (const auto& qu : qs) {
        const auto mu = matching(au, st.current, qu, closure);
        if (mu.empty()) continue;
        for (const auto& qv : qs) {
          if (qv == qu) continue;
          const auto mv = matching(av, st.current, qv, closure);
          for (const auto& su : mu) {
            for (const auto& sv : mv) {
              std::map<std::string, State> sigma = su;
              bool ok = true;
              for (const auto& [x, q2] : sv) {
                auto [it, inserted] = sigma.emplace(x, q2);
                if (!inserted && it->second != q2) {
                  ok = false;
                  break;
                }
              }
              if (!ok ||
                  solve(sigma, st.current, cs, mode, closure).empty())
                continue;
              if (natural_less(qu, qv)) return std::make_pair(qu, qv);
              return std::make_pair(qv, qu);
            }
          }
        }
      }
    }
    return std::nullopt;
  };
  while (auto m = find_merge()) {
    st.current.merge_states(m->first, m->second);
    for (auto& [v, q] : st.value_states)
      if (q == m->second) q = m->first;
    st.equation_touched.insert(m->first);
    merges.push_back(m->second + "->" + m->first);
  }
  std::string line = "step " + std::to_string(st.step) + " equations: merged {";
  for (std::size_t i = 0; i < merges.size(); i++)
    line += (i ? "," : "") + merges[i];
  st.trace.push_back(line + "}");
  return st.current;
}

namespace {

std::vector<LambdaTr> propag_additions(const Lta& a) {
  const auto closure = a.eps_closure();
  // lambda values per state, inherited through epsilon transitions
  std::map<State, std::vector<Interval>> vals;
  for (const auto& l : a.lambdas()) {
    vals[l.target].push_back(l.value);
    if (auto it = closure.find(l.target); it != closure.end())
      for (const auto& q : it->second) vals[q].push_back(l.value);
  }
  for (auto& [q, vs] : vals) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  std::vector<LambdaTr> adds;
  for (const auto& g : a.grounds()) {
    if (!a.syms.builtins.count(g.head)) continue;
    std::vector<const std::vector<Interval>*> cand;
    bool feed = true;
    for (const auto& q : g.args) {
      auto it = vals.find(q);
      if (it == vals.end() || it->second.empty()) {
        feed = false;
        break;
      }
      cand.push_back(&it->second);
    }
    if (!feed) continue;
    std::vector<std::size_t> idx(cand.size(), 0);
    while (true) {
      Interval v = eval_op(g.head, (*cand[0])[idx[0]], (*cand[1])[idx[1]]);
      if (!v.is_bottom()) {
        bool subsumed = false;
        for (const auto& l : a.lambdas())
          if (l.target == g.target && v.leq(l.value)) {
            subsumed = true;
            break;
          }
        if (!subsumed) adds.push_back({v, g.target});
      }
      int i = static_cast<int>(idx.size()) - 1;
      for (; i >= 0; i--) {
        if (++idx[i] < cand[i]->size()) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
  }
  std::sort(adds.begin(), adds.end());
  adds.erase(std::unique(adds.begin(), adds.end()), adds.end());
  return adds;
}

Lta eval_core(Lta a, const CompletionConfig& cfg, const StateSet& force,
              std::size_t& added, StateSet& widened,
              std::map<State, std::size_t>& counters, std::size_t& passes) {
  added = 0;
  widened.clear();
  counters.clear();
  passes = 0;
  // per-state widening anchor: once a state widens, later rounds widen from
  // the previous widened value, not from the current minimum, so descending
  // chains (negative summands in a loop) jump to -inf instead of sliding
  std::map<State, Interval> anchor;
  for (std::size_t pass = 0;; pass++) {
    if (pass > 100000) throw EngineError("evaluation failed to stabilize");
    passes = pass + 1;
    const auto adds = propag_additions(a);
    if (adds.empty()) break;
    StateSet hot;
    for (const auto& l : adds) {
      a.add_lambda(l.value, l.target);
      counters[l.target]++;
      added++;
      hot.insert(l.target);
    }
    for (const auto& q : hot) {
      if (!(force.count(q) || counters[q] > cfg.widen_after)) continue;
      std::vector<Interval> cur;
      for (const auto& l : a.lambdas())
        if (l.target == q) cur.push_back(l.value);
      if (cur.empty()) continue;
      const auto it = anchor.find(q);
      const Interval base = it != anchor.end()
                                ? it->second
                                : *std::min_element(cur.begin(), cur.end());
      Interval all = Interval::bottom();
      for (const auto& v : cur) all = all.lub(v);
      const Interval wide = base.widen(base.lub(all));
      anchor.insert_or_assign(q, wide);
      if (cur.size() == 1 && cur.front() == wide) continue;  // already stable
      a.remove_lambdas_of(q);
      a.add_lambda(wide, q);
      widened.insert(q);
    }
  }
  return a;
}

}  // namespace

Lta propag(const Lta& a) {
  Lta out = a;
  for (const auto& l : propag_additions(a)) out.add_lambda(l.value, l.target);
  return out;
}

Lta eval_automaton(const Lta& a, const CompletionConfig& cfg) {
  std::size_t added;
  StateSet widened;
  std::map<State, std::size_t> counters;
  std::size_t passes;
  return eval_core(a, cfg, {}, added, widened, counters, passes);
}

Lta eval_automaton(const Lta& a, const CompletionConfig& cfg,
                   CompletionState& st, const StateSet& force_widen) {
  std::size_t added;
  StateSet widened;
  st.current = eval_core(a, cfg, force_widen, added, widened, st.lambda_adds,
                         st.eval_passes);
  const std::string label =
      st.step ? "step " + std::to_string(st.step) + " eval" : "init eval";
  st.trace.push_back(label + ": +" + std::to_string(added) + " lambdas, " +
                     "widened " + set_str(widened));
  return st.current;
}

CompletionResult complete(const Lta& a, const Trs& r,
                          const CompletionConfig& cfg) {
  if (cfg.max_steps < 1)
    throw std::invalid_argument("max_steps must be at least 1");
  if (auto e = r.validate()) throw std::invalid_argument(*e);
  if (auto e = cfg.equations.validate()) throw std::invalid_argument(*e);
  if (auto e = a.validate()) throw std::invalid_argument(*e);
  const SolverMode mode = cfg.mode();
  CompletionState st;
  st.current = a;
  st.step = 0;
  eval_automaton(st.current, cfg, st, {});
  CompletionResult res;
  std::size_t k = 0;
  for (std::size_t step = 1; step <= cfg.max_steps; step++) {
    st.step = step;
    st.equation_touched.clear();
    const Lta prev = st.current;
    one_step(st.current, r, st, mode);
    apply_equations(st.current, cfg.equations, st, mode);
    StateSet force;
    if (step > cfg.widen_after) force = st.equation_touched;
    eval_automaton(st.current, cfg, st, force);
    if (st.current == prev) {
      res.converged = true;
      k = step - 1;
      break;
    }
    k = step;
  }
  st.trace.push_back(res.converged
                         ? "fixpoint after " + std::to_string(k) + " steps"
                         : "budget exhausted after " + std::to_string(k) +
                               " steps");
  res.automaton = st.current;
  res.steps = k;
  res.trace = std::move(st.trace);
  return res;
}

Verdict check_reachability(const Lta& a0, const Lta& bad, const Trs& r,
                           const CompletionConfig& cfg) {
  Verdict v;
  v.completion = complete(a0, r, cfg);
  if (v.completion.converged) {
    Lta probe = intersection(v.completion.automaton, bad);
    if (is_empty(probe)) {
      v.safe = true;
      return v;
    }
    v.witness = sample_member(probe);
  }
  return v;
}

}  // namespace lta
