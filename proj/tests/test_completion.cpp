// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "lta/completion.hpp"
#include "lta/oracle.hpp"

using namespace lta;

namespace {

Interval iv(int lo, int hi) { return Interval::closed(lo, hi); }
Interval from(int lo) { return Interval::of(Bound::of(lo), Bound::pos_inf()); }
Term c(int k) { return Term::intconst(k); }
Term x() { return Term::var("x"); }

// section 5: A0 = {[1,2] -> q1, f(q1) -> q2}, final q2
Lta running_a0() {
  Lta a;
  a.syms.passive["f"] = 1;
  a.syms.passive["cons"] = 2;
  a.syms.builtins["+"] = 2;
  a.add_lambda(iv(1, 2), "q1");
  a.add_ground("f", {"q1"}, "q2");
  a.add_final("q2");
  return a;
}

Trs stream_trs() {
  Trs r;
  r.name = "stream";
  const Term fx = Term::app("f", {x()});
  r.rules.push_back(
      {fx,
       Term::app("cons", {x(), Term::app("f", {Term::op("+", {x(), c(1)})})}),
       {{Relation::Lt, x(), c(3)}}});
  r.rules.push_back(
      {fx,
       Term::app("cons", {x(), Term::app("f", {Term::op("+", {x(), c(2)})})}),
       {{Relation::Gt, x(), c(2)}}});
  return r;
}

EquationSet approx_eqs() {
  EquationSet e;
  e.name = "approx";
  e.equations.push_back(
      {x(), Term::op("+", {x(), c(2)}), {{Relation::Ge, x(), c(5)}}});
  return e;
}

std::set<Interval> lambdas_of(const Lta& a, const State& q) {
  std::set<Interval> out;
  for (const auto& l : a.lambdas())
    if (l.target == q) out.insert(l.value);
  return out;
}

std::set<Term> lang(const Lta& a, int depth, int lo, int hi) {
  EnumBounds b;
  b.max_depth = depth;
  b.atom_lo = lo;
  b.atom_hi = hi;
  return enumerate_language(a, b).terms;
}

}  // namespace

TEST_CASE("matching") {
  Lta a;
  a.syms.passive["f"] = 1;
  a.add_lambda(iv(2, 8), "q1");
  a.add_ground("f", {"q1"}, "q2");
  a.add_final("q2");
  SUBCASE("unfolds one level") {
    const auto ms = matching(Term::app("f", {x()}), a, "q2");
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].at("x") == "q1");
  }
  SUBCASE("clash on a state without matching transitions") {
    CHECK(matching(Term::app("f", {x()}), a, "q1").empty());
  }
  SUBCASE("agrees with a brute-force run-based matcher on ex:part") {
    Lta p;
    p.syms.passive["f"] = 2;
    p.add_lambda(iv(-3, -1), "q1");
    p.add_lambda(iv(-5, -2), "q2");
    p.add_lambda(iv(3, 4), "q3");
    p.add_lambda(iv(-3, 2), "q4");
    p.add_ground("f", {"q1", "q2"}, "q5");
    p.add_ground("f", {"q3", "q4"}, "q6");
    p.add_ground("f", {"q5", "q6"}, "qf1");
    p.add_final("qf1");
    const Term pat = Term::app("f", {x(), Term::var("y")});
    for (const auto& q : p.states) {
      std::set<std::pair<State, State>> brute;
      for (const auto& qa : p.states)
        for (const auto& qb : p.states) {
          const Term probe =
              Term::app("f", {Term::state(qa), Term::state(qb)});
          if (p.reaches(probe).count(q)) brute.insert({qa, qb});
        }
      std::set<std::pair<State, State>> mine;
      for (const auto& m : matching(pat, p, q))
        mine.insert({m.at("x"), m.at("y")});
      CHECK(mine == brute);
    }
  }
  SUBCASE("epsilon transitions feed the unfold") {
    Lta e = a;
    e.add_ground("f", {"q1"}, "q3");
    e.add_epsilon("q3", "q4");
    const auto ms = matching(Term::app("f", {x()}), e, "q4");
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].at("x") == "q1");
  }
}

TEST_CASE("omega") {
  Lta a;
  a.syms.passive["f"] = 1;
  a.syms.passive["g"] = 1;
  a.add_lambda(iv(2, 8), "q1");
  a.add_ground("f", {"q1"}, "q2");
  a.add_final("q2");
  SUBCASE("section 4.1: matching restricted to [3,7]") {
    RewriteRule r{Term::app("f", {x()}),
                  Term::app("g", {x()}),
                  {{Relation::Gt, x(), c(3)}, {Relation::Lt, x(), c(7)}}};
    const auto subs = omega(a, r, "q2");
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].at("x") == Term::abs(iv(3, 7)));
  }
  SUBCASE("rhs already recognized at q is dropped") {
    RewriteRule r{Term::app("f", {x()}),
                  Term::app("f", {x()}),
                  {{Relation::Gt, x(), c(3)}}};
    CHECK(omega(a, r, "q2").empty());
  }
  SUBCASE("unsatisfiable conditions yield nothing") {
    RewriteRule r{Term::app("f", {x()}),
                  Term::app("g", {x()}),
                  {{Relation::Gt, x(), c(20)}}};
    CHECK(omega(a, r, "q2").empty());
  }
  SUBCASE("unshrunk lambda keeps the state binding") {
    RewriteRule r{Term::app("f", {x()}),
                  Term::app("g", {x()}),
                  {{Relation::Ge, x(), c(0)}}};
    const auto subs = omega(a, r, "q2");
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].at("x") == Term::state("q1"));
  }
}

TEST_CASE("normalize") {
  SUBCASE("section 5 rhs instance over A0") {
    CompletionState st;
    st.current = running_a0();
    const Term rhs = Term::app(
        "cons", {Term::state("q1"),
                 Term::app("f", {Term::op("+", {Term::state("q1"), c(1)})})});
    normalize(rhs, "qt", st);
    const Lta& a = st.current;
    CHECK(lambdas_of(a, "q[1,1]") == std::set<Interval>{iv(1, 1)});
    REQUIRE(a.ground_targets("+", {"q1", "q[1,1]"}).size() == 1);
    const State qplus = a.ground_targets("+", {"q1", "q[1,1]"})[0];
    REQUIRE(a.ground_targets("f", {qplus}).size() == 1);
    const State qf = a.ground_targets("f", {qplus})[0];
    CHECK(a.has_ground("cons", {"q1", qf}, "qt"));
    // exactly four new transitions, no epsilon
    CHECK(a.lambdas().size() == 2);
    CHECK(a.grounds().size() == 4);
    CHECK(a.epsilons().empty());
  }
  SUBCASE("abstract constant becomes a direct lambda") {
    CompletionState st;
    st.current = running_a0();
    normalize(Term::abs(iv(3, 3)), "q2", st);
    CHECK(lambdas_of(st.current, "q2") == std::set<Interval>{iv(3, 3)});
  }
  SUBCASE("integer constant goes through alpha") {
    CompletionState st;
    st.current = running_a0();
    normalize(c(5), "q2", st);
    CHECK(lambdas_of(st.current, "q2") == std::set<Interval>{iv(5, 5)});
  }
  SUBCASE("existing subterm states are reused") {
    CompletionState st;
    st.current = running_a0();
    // f(q1) already runs to q2, so no fresh state appears for it
    normalize(Term::app("cons", {Term::state("q1"),
                                 Term::app("f", {Term::state("q1")})}),
              "qt", st);
    CHECK(st.current.has_ground("cons", {"q1", "q2"}, "qt"));
    CHECK(st.current.grounds().size() == 2);
  }
}

TEST_CASE("one_step") {
  SUBCASE("section 5 first step in strict-int mode") {
    CompletionState st;
    st.step = 1;
    const Lta a1 = one_step(running_a0(), stream_trs(), st,
                            SolverMode::StrictInt);
    // one critical pair: rule (A) at q2 with x restricted to [1,2]
    CHECK(lambdas_of(a1, "q[1,1]") == std::set<Interval>{iv(1, 1)});
    REQUIRE(a1.ground_targets("+", {"q1", "q[1,1]"}).size() == 1);
    const State qp = a1.ground_targets("+", {"q1", "q[1,1]"})[0];
    REQUIRE(a1.ground_targets("f", {qp}).size() == 1);
    const State qf = a1.ground_targets("f", {qp})[0];
    REQUIRE(a1.ground_targets("cons", {"q1", qf}).size() == 1);
    const State qc = a1.ground_targets("cons", {"q1", qf})[0];
    REQUIRE(a1.epsilons().size() == 1);
    CHECK(a1.epsilons()[0].from == qc);
    CHECK(a1.epsilons()[0].to == "q2");
    // rule (B) stays silent: x > 2 cannot meet [1,2] over the integers
    CHECK(a1.grounds().size() == 4);
    CHECK(st.trace.back() == "step 1 completion: 1 pairs, +5 transitions");
  }
  SUBCASE("no applicable rule leaves the automaton alone") {
    Trs none;
    none.name = "none";
    CompletionState st;
    const Lta a1 = one_step(running_a0(), none, st);
    CHECK(a1 == running_a0());
  }
}

TEST_CASE("apply_equations on the section 4.2 chain") {
  // rule f(x) -> f(x+1) produced the chain; lambdas already evaluated
  Lta a;
  a.syms.builtins["+"] = 2;
  a.add_lambda(iv(1, 1), "q1");
  a.add_lambda(iv(2, 2), "q2");
  a.add_lambda(iv(3, 3), "q3");
  a.add_lambda(iv(4, 4), "q4");
  a.add_lambda(iv(5, 5), "q5");
  a.add_ground("+", {"q2", "q1"}, "q3");
  a.add_ground("+", {"q3", "q1"}, "q4");
  a.add_ground("+", {"q4", "q1"}, "q5");
  a.add_final("q5");

  EquationSet e;
  e.name = "eq";
  e.equations.push_back(
      {x(), Term::op("+", {x(), c(1)}), {{Relation::Gt, x(), c(3)}}});

  SUBCASE("strict-int merges exactly q4 and q5") {
    CompletionState st;
    const Lta m = apply_equations(a, e, st, SolverMode::StrictInt);
    CHECK(m.states.count("q5") == 0);
    CHECK(m.states.count("q4") == 1);
    CHECK(m.states.count("q3") == 1);
    CHECK(st.equation_touched == StateSet{"q4"});
    // the chain tail now loops
    CHECK(m.has_ground("+", {"q4", "q1"}, "q4"));
    CHECK(m.finals.count("q4") == 1);
    CHECK(lambdas_of(m, "q4") == std::set<Interval>{iv(4, 4), iv(5, 5)});
  }
  SUBCASE("unsatisfiable guard merges nothing") {
    EquationSet dead;
    dead.equations.push_back(
        {x(), Term::op("+", {x(), c(1)}), {{Relation::Gt, x(), c(50)}}});
    CompletionState st;
    CHECK(apply_equations(a, dead, st) == a);
  }
  SUBCASE("language never shrinks") {
    CompletionState st;
    const Lta m = apply_equations(a, e, st, SolverMode::StrictInt);
    for (const auto& t : lang(a, 2, 0, 6)) CHECK(m.member(t));
  }
}

TEST_CASE("propag") {
  Lta a;
  a.syms.passive["f"] = 1;
  a.syms.builtins["+"] = 2;
  a.add_lambda(iv(3, 6), "q1");
  a.add_lambda(iv(2, 8), "q2");
  a.add_ground("+", {"q1", "q2"}, "q3");
  a.add_ground("f", {"q3"}, "qf");
  a.add_final("qf");
  SUBCASE("adds the evaluated tuple") {
    const Lta p = propag(a);
    CHECK(lambdas_of(p, "q3") == std::set<Interval>{iv(5, 14)});
  }
  SUBCASE("subsumed results change nothing") {
    Lta b = a;
    b.add_lambda(iv(0, 20), "q3");
    CHECK(propag(b) == b);
  }
  SUBCASE("lambda-less argument state feeds nothing") {
    Lta b;
    b.syms.builtins["+"] = 2;
    b.add_lambda(iv(1, 2), "qa");
    b.add_ground("+", {"qa", "qb"}, "qc");
    CHECK(propag(b) == b);
  }
}

TEST_CASE("eval_automaton") {
  CompletionConfig cfg;
  cfg.widen_after = 3;
  SUBCASE("section 4.3 divergent loop widens to [2,+inf[") {
    Lta a;
    a.syms.builtins["+"] = 2;
    a.add_lambda(iv(3, 6), "q1");
    a.add_lambda(iv(2, 8), "q2");
    a.add_ground("+", {"q1", "q2"}, "q2");
    a.add_final("q2");
    const Lta e = eval_automaton(a, cfg);
    CHECK(lambdas_of(e, "q2") == std::set<Interval>{from(2)});
    CHECK(lambdas_of(e, "q1") == std::set<Interval>{iv(3, 6)});
    // a second evaluation is a fixpoint
    CHECK(eval_automaton(e, cfg) == e);
  }
  SUBCASE("fixpoint input unchanged") {
    Lta a;
    a.syms.builtins["+"] = 2;
    a.add_lambda(iv(1, 2), "q1");
    a.add_final("q1");
    CHECK(eval_automaton(a, cfg) == a);
  }
  SUBCASE("language never shrinks") {
    Lta a;
    a.syms.builtins["+"] = 2;
    a.add_lambda(iv(3, 6), "q1");
    a.add_lambda(iv(2, 8), "q2");
    a.add_ground("+", {"q1", "q2"}, "q2");
    a.add_final("q2");
    const Lta e = eval_automaton(a, cfg);
    for (const auto& t : lang(a, 1, 0, 10)) CHECK(e.member(t));
  }
}

TEST_CASE("complete") {
  CompletionConfig cfg;
  cfg.widen_after = 3;
  cfg.strict_int = true;
  cfg.equations = approx_eqs();
  SUBCASE("section 5 end to end") {
    const auto res = complete(running_a0(), stream_trs(), cfg);
    CHECK(res.converged);
    CHECK(res.steps <= 5);
    // the marquee transitions: widened head values and the +2 self-loop
    bool widened_lambda = false;
    for (const auto& l : res.automaton.lambdas())
      if (l.value == from(5)) widened_lambda = true;
    CHECK(widened_lambda);
    bool selfloop = false;
    for (const auto& g : res.automaton.grounds())
      if (g.head == "+" && g.args.size() == 2 && g.args[0] == g.target &&
          lambdas_of(res.automaton, g.args[1]).count(iv(2, 2)))
        selfloop = true;
    CHECK(selfloop);
    CHECK(res.trace.back() ==
          "fixpoint after " + std::to_string(res.steps) + " steps");
    SUBCASE("completing the fixpoint again is a no-op step") {
      const auto again = complete(res.automaton, stream_trs(), cfg);
      CHECK(again.converged);
      CHECK(again.steps == 0);
      CHECK(again.automaton == res.automaton);
    }
    SUBCASE("two runs agree byte for byte") {
      const auto res2 = complete(running_a0(), stream_trs(), cfg);
      CHECK(res.automaton == res2.automaton);
      CHECK(res.trace == res2.trace);
    }
  }
  SUBCASE("empty TRS converges immediately to eval(a)") {
    Trs none;
    none.name = "none";
    CompletionConfig plain;
    const auto res = complete(running_a0(), none, plain);
    CHECK(res.converged);
    CHECK(res.steps == 0);
    CHECK(res.automaton == eval_automaton(running_a0(), plain));
  }
  SUBCASE("factorial closure lands inside the completed language") {
    Lta a;
    a.syms.passive["fact"] = 1;
    a.syms.builtins["*"] = 2;
    a.syms.builtins["-"] = 2;
    a.add_lambda(iv(0, 3), "q1");
    a.add_ground("fact", {"q1"}, "q2");
    a.add_final("q2");
    Trs r;
    r.name = "fact";
    const Term fx = Term::app("fact", {x()});
    r.rules.push_back({fx,
                       Term::op("*", {x(), Term::app("fact", {Term::op(
                                              "-", {x(), c(1)})})}),
                       {{Relation::Ge, x(), c(2)}}});
    r.rules.push_back(
        {fx, c(1), {{Relation::Ge, x(), c(0)}, {Relation::Le, x(), c(1)}}});
    CompletionConfig fc;
    fc.widen_after = 3;
    fc.max_steps = 30;
    const auto res = complete(a, r, fc);
    REQUIRE(res.converged);
    CHECK(res.automaton.member(Term::abs(Interval::atom(1))));
    // every concrete value reachable from fact(0..3) is recognized
    std::set<Term> seeds;
    for (int k = 0; k <= 3; k++) seeds.insert(Term::app("fact", {c(k)}));
    const auto closure = reachable(seeds, r, 6, 100000);
    REQUIRE_FALSE(closure.truncated);
    for (const auto& t : closure.terms)
      if (t.kind() == SymKind::IntConst)
        CHECK(res.automaton.member(Term::abs(Interval::atom(t.ivalue()))));
  }
  SUBCASE("step budget exhaustion is reported, not hidden") {
    CompletionConfig tiny = cfg;
    tiny.max_steps = 1;
    const auto res = complete(running_a0(), stream_trs(), tiny);
    CHECK_FALSE(res.converged);
    CHECK(res.steps == 1);
    CHECK(res.trace.back() == "budget exhausted after 1 steps");
  }
}

TEST_CASE("check_reachability") {
  SUBCASE("bad = empty automaton is Safe") {
    Lta bad;
    bad.syms = running_a0().syms;
    CompletionConfig cfg;
    cfg.widen_after = 3;
    cfg.strict_int = true;
    cfg.equations = approx_eqs();
    const auto v = check_reachability(running_a0(), bad, stream_trs(), cfg);
    CHECK(v.safe);
    CHECK_FALSE(v.witness.has_value());
  }
  SUBCASE("bad = initial automaton is Unknown with a witness") {
    CompletionConfig cfg;
    cfg.widen_after = 3;
    cfg.strict_int = true;
    cfg.equations = approx_eqs();
    const auto v =
        check_reachability(running_a0(), running_a0(), stream_trs(), cfg);
    CHECK_FALSE(v.safe);
    REQUIRE(v.witness.has_value());
    CHECK(running_a0().member(term_abstract(*v.witness)));
  }
  SUBCASE("list heads stuck at 4 never appear") {
    // bad: some cons head is exactly [4,4]
    Lta bad;
    bad.syms = running_a0().syms;
    bad.add_lambda(Interval::top(), "ba");
    bad.add_lambda(iv(4, 4), "bh");
    bad.add_ground("cons", {"ba", "ba"}, "ba");
    bad.add_ground("f", {"ba"}, "ba");
    bad.add_ground("cons", {"bh", "ba"}, "bt");
    bad.add_ground("cons", {"ba", "bt"}, "bt");
    bad.add_ground("cons", {"bt", "ba"}, "bt");
    bad.add_ground("f", {"bt"}, "bt");
    bad.add_final("bt");
    CompletionConfig cfg;
    cfg.widen_after = 3;
    cfg.strict_int = true;
    cfg.equations = approx_eqs();
    const auto v = check_reachability(running_a0(), bad, stream_trs(), cfg);
    CHECK(v.safe);
  }
}

// theorem 2 and 3 shape, sampled: no phase loses accepted terms
TEST_CASE("phases never shrink the language") {
  const Lta a0 = running_a0();
  CompletionConfig cfg;
  cfg.widen_after = 3;
  const auto l0 = lang(a0, 3, 0, 8);

  CompletionState st;
  st.step = 1;
  const Lta a1 = one_step(a0, stream_trs(), st, SolverMode::StrictInt);
  for (const auto& t : l0) CHECK(a1.member(t));

  const Lta a2 = apply_equations(a1, approx_eqs(), st, SolverMode::StrictInt);
  for (const auto& t : l0) CHECK(a2.member(t));

  const Lta a3 = eval_automaton(a2, cfg);
  for (const auto& t : l0) CHECK(a3.member(t));
}
