// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lta/partitioned.hpp"

#include <algorithm>
#include <map>

namespace lta {

std::optional<std::string> Plta::check() const {
  for (const auto& l : base.lambdas()) {
    bool inside = false;
    for (const auto& b : partition.blocks())
      if (l.value.leq(b)) {
        inside = true;
        break;
      }
    if (!inside)
      return "Lambda " + l.value.to_string() + " -> " + l.target +
             " crosses a block boundary";
  }
  return std::nullopt;
}

Plta to_plta(const Lta& a, const Partition& p) {
  Plta out;
  out.partition = p;
  out.base = a;
  Lta& b = out.base;
  std::vector<LambdaTr> original = a.lambdas();
  // rebuild the lambda side from the block-wise splits
  Lta rebuilt;
  rebuilt.name = a.name;
  rebuilt.syms = a.syms;
  rebuilt.states = a.states;
  rebuilt.finals = a.finals;
  for (const auto& g : a.grounds()) rebuilt.add_ground(g.head, g.args, g.target);
  for (const auto& e : a.epsilons()) rebuilt.add_epsilon(e.from, e.to);
  for (const auto& l : original)
    for (auto& [bi, piece] : p.split(l.value))
      rebuilt.add_lambda(std::move(piece), l.target);
  b = std::move(rebuilt);
  return out;
}

Plta merge_plta(const Plta& a) {
  Plta out = a;
  Lta& b = out.base;
  std::map<std::pair<State, std::size_t>, Interval> fused;
  for (const auto& l : a.base.lambdas())
    for (const auto& [bi, piece] : a.partition.split(l.value)) {
      auto key = std::make_pair(l.target, bi);
      auto it = fused.find(key);
      if (it == fused.end())
        fused.emplace(key, piece);
      else
        it->second = it->second.lub(piece);
    }
  Lta rebuilt;
  rebuilt.name = b.name;
  rebuilt.syms = b.syms;
  rebuilt.states = b.states;
  rebuilt.finals = b.finals;
  for (const auto& g : b.grounds()) rebuilt.add_ground(g.head, g.args, g.target);
  for (const auto& e : b.epsilons()) rebuilt.add_epsilon(e.from, e.to);
  for (const auto& [key, v] : fused) rebuilt.add_lambda(v, key.first);
  b = std::move(rebuilt);
  return out;
}

namespace {

State set_state_name(const StateSet& s) {
  std::string n = "q{";
  bool first = true;
  for (const auto& q : s) {
    if (!first) n += ",";
    n += q;
    first = false;
  }
  return n + "}";
}

std::vector<std::pair<std::string, int>> all_heads(const SymbolTable& syms) {
  std::vector<std::pair<std::string, int>> out(syms.passive.begin(),
                                               syms.passive.end());
  out.insert(out.end(), syms.builtins.begin(), syms.builtins.end());
  return out;
}

}  // namespace

Plta determinize(const Plta& a) {
  if (!a.base.epsilons().empty())
    throw EngineError("determinize needs an epsilon-free automaton");
  const Lta& in = a.base;
  Plta out;
  out.partition = a.partition;
  out.base.name = in.name + "_det";
  out.base.syms = in.syms;
  std::map<StateSet, State> names;
  auto name_of = [&](const StateSet& s) {
    auto it = names.find(s);
    if (it != names.end()) return it->second;
    State n = set_state_name(s);
    names.emplace(s, n);
    return n;
  };
  std::vector<StateSet> dstates;
  // one candidate state per block, fusing every lambda inside it
  for (const auto& block : a.partition.blocks()) {
    StateSet s;
    Interval fused = Interval::bottom();
    for (const auto& l : in.lambdas())
      if (l.value.leq(block)) {
        s.insert(l.target);
        fused = fused.lub(l.value);
      }
    if (s.empty()) continue;
    out.base.add_lambda(fused, name_of(s));
    if (std::find(dstates.begin(), dstates.end(), s) == dstates.end())
      dstates.push_back(s);
  }
  // ground saturation over subset states
  const auto heads = all_heads(in.syms);
  bool change = true;
  while (change) {
    change = false;
    for (const auto& [head, arity] : heads) {
      std::vector<std::size_t> idx(arity, 0);
      if (dstates.empty() && arity > 0) continue;
      while (true) {
        StateSet target;
        for (const auto& g : in.grounds()) {
          if (g.head != head || static_cast<int>(g.args.size()) != arity)
            continue;
          bool ok = true;
          for (int i = 0; i < arity && ok; i++)
            ok = dstates[idx[i]].count(g.args[i]) > 0;
          if (ok) target.insert(g.target);
        }
        if (!target.empty()) {
          std::vector<State> args;
          args.reserve(arity);
          for (int i = 0; i < arity; i++) args.push_back(name_of(dstates[idx[i]]));
          State tq = name_of(target);
          if (!out.base.has_ground(head, args, tq)) {
            out.base.add_ground(head, std::move(args), tq);
            change = true;
          }
          if (std::find(dstates.begin(), dstates.end(), target) ==
              dstates.end()) {
            dstates.push_back(target);
            change = true;
          }
        }
        int i = arity - 1;
        for (; i >= 0; i--) {
          if (++idx[i] < dstates.size()) break;
          idx[i] = 0;
        }
        if (i < 0) break;
      }
    }
  }
  for (const auto& s : dstates)
    for (const auto& q : s)
      if (in.finals.count(q)) {
        out.base.add_final(name_of(s));
        break;
      }
  return out;
}

namespace {

// left-hand sides as functions: head + args -> unique target (deterministic)
struct GroundFn {
  std::map<std::pair<std::string, std::vector<State>>, State> fn;
  explicit GroundFn(const Lta& a) {
    for (const auto& g : a.grounds()) fn[{g.head, g.args}] = g.target;
  }
  const State* target(const std::string& head,
                      const std::vector<State>& args) const {
    auto it = fn.find({head, args});
    return it == fn.end() ? nullptr : &it->second;
  }
};

}  // namespace

Plta minimize(const Plta& a) {
  if (!a.base.epsilons().empty() || !is_deterministic(a.base))
    throw EngineError("minimize needs a deterministic epsilon-free automaton");
  Plta merged = merge_plta(a);
  const Lta& in = merged.base;
  std::vector<State> qs(in.states.begin(), in.states.end());
  std::map<State, int> cls;
  for (const auto& q : qs) cls[q] = in.finals.count(q) ? 1 : 0;
  GroundFn fn(in);

  // per-state, per-block lambda presence
  auto lambda_sig = [&](const State& q) {
    std::vector<bool> sig(a.partition.size(), false);
    for (const auto& l : in.lambdas())
      if (l.target == q)
        for (const auto& [bi, piece] : a.partition.split(l.value))
          sig[bi] = true;
    return sig;
  };
  std::map<State, std::vector<bool>> sigs;
  for (const auto& q : qs) sigs[q] = lambda_sig(q);

  const auto heads = all_heads(in.syms);
  auto distinguishable = [&](const State& x, const State& y) {
    if (sigs[x] != sigs[y]) return true;
    for (const auto& [head, arity] : heads) {
      if (arity == 0) {
        const State* t = fn.target(head, {});
        if ((t && *t == x) != (t && *t == y)) return true;
        continue;
      }
      // contexts: x or y at position i, every state tuple elsewhere
      for (int pos = 0; pos < arity; pos++) {
        std::vector<std::size_t> counter(arity - 1, 0);
        while (true) {
          std::vector<State> ax, ay;
          std::size_t ci = 0;
          for (int i = 0; i < arity; i++) {
            if (i == pos) {
              ax.push_back(x);
              ay.push_back(y);
            } else {
              ax.push_back(qs[counter[ci]]);
              ay.push_back(qs[counter[ci]]);
              ci++;
            }
          }
          const State* tx = fn.target(head, ax);
          const State* ty = fn.target(head, ay);
          if ((tx == nullptr) != (ty == nullptr)) return true;
          if (tx && ty && cls[*tx] != cls[*ty]) return true;
          int i = static_cast<int>(counter.size()) - 1;
          for (; i >= 0; i--) {
            if (++counter[i] < qs.size()) break;
            counter[i] = 0;
          }
          if (i < 0) break;
        }
      }
    }
    return false;
  };

  bool change = true;
  while (change) {
    change = false;
    // split classes by pairwise distinguishability against representatives
    std::map<int, std::vector<State>> members;
    for (const auto& q : qs) members[cls[q]].push_back(q);
    int next = 0;
    for (auto& [c, qsv] : members) next = std::max(next, c + 1);
    for (auto& [c, qsv] : members) {
      if (qsv.size() < 2) continue;
      const State& rep = qsv.front();
      std::vector<State> moved;
      for (std::size_t i = 1; i < qsv.size(); i++)
        if (distinguishable(rep, qsv[i])) moved.push_back(qsv[i]);
      if (!moved.empty() && moved.size() < qsv.size()) {
        for (const auto& q : moved) cls[q] = next;
        next++;
        change = true;
      }
    }
  }

  // class representatives and rebuilt automaton
  std::map<int, StateSet> classes;
  for (const auto& q : qs) classes[cls[q]].insert(q);
  std::map<State, State> rep;
  for (const auto& [c, s] : classes) {
    State n = s.size() == 1 ? *s.begin() : set_state_name(s);
    for (const auto& q : s) rep[q] = n;
  }
  Plta out;
  out.partition = a.partition;
  out.base.name = in.name + "_min";
  out.base.syms = in.syms;
  for (const auto& q : qs) out.base.add_state(rep[q]);
  for (const auto& q : in.finals) out.base.add_final(rep[q]);
  std::map<std::pair<State, std::size_t>, Interval> fused;
  for (const auto& l : in.lambdas())
    for (const auto& [bi, piece] : a.partition.split(l.value)) {
      auto key = std::make_pair(rep[l.target], bi);
      auto it = fused.find(key);
      if (it == fused.end())
        fused.emplace(key, piece);
      else
        it->second = it->second.lub(piece);
    }
  for (const auto& [key, v] : fused) out.base.add_lambda(v, key.first);
  for (const auto& g : in.grounds()) {
    std::vector<State> args;
    args.reserve(g.args.size());
    for (const auto& q : g.args) args.push_back(rep[q]);
    out.base.add_ground(g.head, std::move(args), rep[g.target]);
  }
  return out;
}

Plta refine_partition(const Plta& a, const Partition& finer) {
  if (!finer.refines(a.partition))
    throw EngineError("partition " + finer.to_string() + " does not refine " +
                      a.partition.to_string());
  return to_plta(a.base, finer);
}

}  // namespace lta
