// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include "lta/solver.hpp"

#include <algorithm>
#include <set>

namespace lta {

namespace {

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// sum of coeff*var plus a constant
struct LinExpr {
  std::map<std::string, Rat> coeff;
  Rat constant = 0;

  void add(const LinExpr& o, const Rat& scale) {
    for (const auto& [x, a] : o.coeff) {
      Rat& c = coeff[x];
      c += a * scale;
      if (c == 0) coeff.erase(x);
    }
    constant += o.constant * scale;
  }
};

LinExpr lin_of(const Term& t) {
  LinExpr e;
  switch (t.kind()) {
    case SymKind::IntConst:
      e.constant = Rat(t.ivalue());
      return e;
    case SymKind::Var:
      e.coeff[t.sym()] = 1;
      return e;
    case SymKind::Builtin: {
      if (t.sym() == "+" || t.sym() == "-") {
        e = lin_of(t.kids()[0]);
        e.add(lin_of(t.kids()[1]), t.sym() == "+" ? 1 : -1);
        return e;
      }
      if (t.sym() == "*") {
        LinExpr l = lin_of(t.kids()[0]);
        LinExpr r = lin_of(t.kids()[1]);
        if (!l.coeff.empty() && !r.coeff.empty())
          throw NonLinearConstraint("nonlinear product in constraint: " +
                                    t.to_string());
        if (l.coeff.empty()) std::swap(l, r);
        l.constant *= r.constant;
        for (auto& [x, a] : l.coeff) a *= r.constant;
        LinExpr out;
        for (auto& [x, a] : l.coeff)
          if (a != 0) out.coeff[x] = a;
        out.constant = l.constant;
        return out;
      }
      throw NonLinearConstraint("operation '" + t.sym() +
                                "' not allowed in constraints");
    }
    default:
      throw NonLinearConstraint("non-arithmetic term in constraint: " +
                                t.to_string());
  }
}

// sum coeff*var <= b, or < b when strict
struct LinCon {
  std::map<std::string, Rat> coeff;
  Rat b = 0;
  bool strict = false;
};

struct LinSystem {
  std::vector<LinCon> cons;
  std::vector<LinExpr> diseq;  // expr != 0
};

LinSystem compile(const ConstraintSystem& c) {
  LinSystem sys;
  for (const auto& p : c.conjuncts) {
    LinExpr e = lin_of(p.lhs);
    e.add(lin_of(p.rhs), -1);  // lhs - rhs REL 0
    auto push = [&](const Rat& sign, bool strict) {
      LinCon lc;
      for (const auto& [x, a] : e.coeff) lc.coeff[x] = a * sign;
      lc.b = -e.constant * sign;
      lc.strict = strict;
      sys.cons.push_back(std::move(lc));
    };
    switch (p.rel) {
      case Relation::Lt: push(1, true); break;
      case Relation::Le: push(1, false); break;
      case Relation::Gt: push(-1, true); break;
      case Relation::Ge: push(-1, false); break;
      case Relation::Eq:
        push(1, false);
        push(-1, false);
        break;
      case Relation::Ne: sys.diseq.push_back(std::move(e)); break;
    }
  }
  return sys;
}

// integer solutions of sum a*x < b with integral a, b satisfy <= b-1
void tighten_strict(LinSystem& sys) {
  for (auto& lc : sys.cons) {
    if (!lc.strict) continue;
    Int mult = 1;
    for (const auto& [x, a] : lc.coeff) mult = lcm(mult, denominator(a));
    mult = lcm(mult, denominator(lc.b));
    for (auto& [x, a] : lc.coeff) a *= Rat(mult);
    lc.b = lc.b * Rat(mult) - 1;
    lc.strict = false;
  }
}

// 0 REL b that cannot hold
bool trivially_false(const LinCon& lc) {
  if (!lc.coeff.empty()) return false;
  return lc.strict ? lc.b <= 0 : lc.b < 0;
}

// eliminate one variable; false on derived contradiction
bool eliminate(std::vector<LinCon>& cons, const std::string& v) {
  std::vector<LinCon> lower, upper, rest;
  for (auto& lc : cons) {
    auto it = lc.coeff.find(v);
    if (it == lc.coeff.end())
      rest.push_back(std::move(lc));
    else if (it->second > 0)
      upper.push_back(std::move(lc));
    else
      lower.push_back(std::move(lc));
  }
  for (const auto& lo : lower) {
    const Rat al = -lo.coeff.at(v);  // positive
    for (const auto& up : upper) {
      const Rat au = up.coeff.at(v);  // positive
      LinCon sum;
      sum.strict = lo.strict || up.strict;
      sum.b = lo.b * au + up.b * al;
      for (const auto& [x, a] : lo.coeff)
        if (x != v) sum.coeff[x] = a * au;
      for (const auto& [x, a] : up.coeff) {
        if (x == v) continue;
        Rat& c = sum.coeff[x];
        c += a * al;
        if (c == 0) sum.coeff.erase(x);
      }
      if (trivially_false(sum)) return false;
      if (!sum.coeff.empty()) rest.push_back(std::move(sum));
    }
  }
  cons = std::move(rest);
  return true;
}

struct VarBounds {
  Bound lo = Bound::neg_inf();
  Bound hi = Bound::pos_inf();
};

// project onto one variable: eliminate every other, then take the integer
// hull of the closed rational bounds (fractional endpoints round inward)
std::optional<VarBounds> project(std::vector<LinCon> cons,
                                 const std::string& v,
                                 const std::set<std::string>& all_vars) {
  for (const auto& other : all_vars) {
    if (other == v) continue;
    if (!eliminate(cons, other)) return std::nullopt;
  }
  std::optional<Rat> lo, hi;
  for (const auto& lc : cons) {
    if (lc.coeff.empty()) {
      if (trivially_false(lc)) return std::nullopt;
      continue;
    }
    const Rat a = lc.coeff.at(v);
    Rat bound = lc.b / a;
    if (a > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else {
      if (!lo || bound > *lo) lo = bound;
    }
  }
  VarBounds vb;
  if (lo) vb.lo = Bound::of(rat_ceil(*lo));
  if (hi) vb.hi = Bound::of(rat_floor(*hi));
  return vb;
}

// interval evaluation of a linear expression over the box
Interval interval_of(const LinExpr& e, const Box& box) {
  Interval acc = Interval::atom(rat_floor(e.constant));  // integral in practice
  for (const auto& [x, a] : e.coeff) {
    Interval xi = box.at(x);
    Interval term = xi.mul(Interval::atom(numerator(a) / denominator(a)));
    acc = acc.add(term);
  }
  return acc;
}

}  // namespace

std::optional<Box> solve_box(const ConstraintSystem& c, const Box& input,
                             SolverMode mode) {
  for (const auto& [x, v] : input)
    if (v.is_bottom()) return std::nullopt;
  LinSystem sys = compile(c);
  std::set<std::string> cvars;
  for (const auto& lc : sys.cons)
    for (const auto& [x, a] : lc.coeff) cvars.insert(x);
  for (const auto& e : sys.diseq)
    for (const auto& [x, a] : e.coeff) cvars.insert(x);
  for (const auto& x : cvars)
    if (!input.count(x))
      throw std::invalid_argument("constraint variable '" + x +
                                  "' missing from the input box");
  if (mode == SolverMode::StrictInt) tighten_strict(sys);
  // box faces join the system so projections stay inside the input
  for (const auto& [x, v] : input) {
    if (v.lo().finite()) {
      LinCon lc;
      lc.coeff[x] = -1;
      lc.b = -Rat(v.lo().value());
      sys.cons.push_back(std::move(lc));
    }
    if (v.hi().finite()) {
      LinCon lc;
      lc.coeff[x] = 1;
      lc.b = Rat(v.hi().value());
      sys.cons.push_back(std::move(lc));
    }
  }
  for (const auto& lc : sys.cons)
    if (trivially_false(lc)) return std::nullopt;
  std::set<std::string> all_vars(cvars);
  for (const auto& [x, v] : input) all_vars.insert(x);
  Box out;
  for (const auto& [x, v] : input) {
    auto vb = project(sys.cons, x, all_vars);
    if (!vb) return std::nullopt;
    Interval solved = Interval::of(vb->lo, vb->hi).glb(v);
    if (solved.is_bottom()) return std::nullopt;
    out[x] = solved;
  }
  // a disequality rules the box out only when it is pinned to the bad value
  for (const auto& e : sys.diseq) {
    Interval pin = interval_of(e, out);
    if (pin.is_atom() && pin.lo().value() == 0) return std::nullopt;
  }
  return out;
}

bool satisfiable(const ConstraintSystem& c, const Box& input, SolverMode mode) {
  return solve_box(c, input, mode).has_value();
}

std::vector<Solution> solve(const std::map<std::string, State>& sigma,
                            const Lta& a, const ConstraintSystem& c,
                            SolverMode mode) {
  return solve(sigma, a, c, mode, a.eps_closure());
}

std::vector<Solution> solve(const std::map<std::string, State>& sigma,
                            const Lta& a, const ConstraintSystem& c,
                            SolverMode mode, const EpsClosure& closure) {
  std::set<std::string> cvars;
  for (const auto& p : c.conjuncts) {
    for (const auto& x : vars(p.lhs)) cvars.insert(x);
    for (const auto& x : vars(p.rhs)) cvars.insert(x);
  }
  for (const auto& x : cvars)
    if (!sigma.count(x))
      throw std::invalid_argument("condition variable '" + x +
                                  "' not bound by the substitution");
  std::vector<Solution> out;
  if (cvars.empty()) {
    Solution s;
    s.states = sigma;
    out.push_back(std::move(s));
    return out;
  }
  // lambda values reaching each constrained variable's state
  static const StateSet no_reach;
  std::vector<std::string> xs(cvars.begin(), cvars.end());
  std::vector<std::vector<Interval>> cand(xs.size());
  for (std::size_t i = 0; i < xs.size(); i++) {
    const State& q = sigma.at(xs[i]);
    std::set<Interval> vals;
    for (const auto& l : a.lambdas()) {
      auto it = closure.find(l.target);
      const StateSet& reach = it == closure.end() ? no_reach : it->second;
      if (l.target == q || reach.count(q)) vals.insert(l.value);
    }
    cand[i].assign(vals.begin(), vals.end());
    if (cand[i].empty()) return out;
  }
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    Box box;
    for (std::size_t i = 0; i < xs.size(); i++) box[xs[i]] = cand[i][idx[i]];
    if (auto solved = solve_box(c, box, mode)) {
      Solution s;
      for (const auto& [x, q] : sigma)
        if (!cvars.count(x)) s.states.emplace(x, q);
      for (std::size_t i = 0; i < xs.size(); i++)
        s.solved.emplace(
            xs[i], SolvedVar{sigma.at(xs[i]), cand[i][idx[i]],
                             solved->at(xs[i])});
      if (std::find(out.begin(), out.end(), s) == out.end())
        out.push_back(std::move(s));
    }
    int i = static_cast<int>(xs.size()) - 1;
    for (; i >= 0; i--) {
      if (++idx[i] < cand[i].size()) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace lta
