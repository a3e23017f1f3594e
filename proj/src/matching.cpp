// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "lta/completion.hpp"

namespace lta {

namespace {

struct Goal {
  Term s;
  State q;
};

struct MatchCtx {
  const Lta& a;
  const EpsClosure& closure;
  std::vector<std::map<std::string, State>> out;

  MatchCtx(const Lta& a_, const EpsClosure& c) : a(a_), closure(c) {}

  // does u ->* q through epsilon transitions
  bool eps_reaches(const State& u, const State& q) const {
    if (u == q) return true;
    auto it = closure.find(u);
    return it != closure.end() && it->second.count(q) > 0;
  }

  void go(std::vector<Goal> goals, std::map<std::string, State> sigma) {
    if (goals.empty()) {
      out.push_back(std::move(sigma));
      return;
    }
    Goal g = std::move(goals.back());
    goals.pop_back();
    switch (g.s.kind()) {
      case SymKind::Var: {
        auto it = sigma.find(g.s.sym());
        if (it != sigma.end()) {
          if (it->second == g.q) go(std::move(goals), std::move(sigma));
          return;
        }
        sigma.emplace(g.s.sym(), g.q);
        go(std::move(goals), std::move(sigma));
        return;
      }
      case SymKind::StateRef:
        if (eps_reaches(g.s.sym(), g.q)) go(std::move(goals), std::move(sigma));
        return;
      default:
        // ground goals run directly; open ones unfold through every ground
        // transition reaching q (Config)
        if (!g.s.has_var()) {
          if (a.reaches(g.s, closure).count(g.q))
            go(std::move(goals), std::move(sigma));
          return;
        }
        for (const auto& tr : a.grounds()) {
          if (tr.head != g.s.sym() || tr.args.size() != g.s.arity()) continue;
          if (!eps_reaches(tr.target, g.q)) continue;
          auto sub = goals;
          for (std::size_t i = 0; i < tr.args.size(); i++)
            sub.push_back({g.s.kids()[i], tr.args[i]});
          go(std::move(sub), sigma);
        }
        return;
    }
  }
};

}  // namespace

std::vector<std::map<std::string, State>> matching(const Term& l, const Lta& a,
                                                   const State& q,
                                                   const EpsClosure& closure) {
  MatchCtx ctx(a, closure);
  ctx.go({{l, q}}, {});
  std::sort(ctx.out.begin(), ctx.out.end());
  ctx.out.erase(std::unique(ctx.out.begin(), ctx.out.end()), ctx.out.end());
  return ctx.out;
}

std::vector<std::map<std::string, State>> matching(const Term& l, const Lta& a,
                                                   const State& q) {
  return matching(l, a, q, a.eps_closure());
}

}  // namespace lta
