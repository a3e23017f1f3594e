// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "lta/oracle.hpp"
#include "lta/partitioned.hpp"

using namespace lta;

namespace {

Interval iv(int lo, int hi) { return Interval::closed(lo, hi); }
Interval from(int lo) { return Interval::of(Bound::of(lo), Bound::pos_inf()); }
Interval upto(int hi) { return Interval::of(Bound::neg_inf(), Bound::of(hi)); }

Partition pi3() { return Partition({upto(-1), iv(0, 0), from(1)}); }
Partition pi4() {
  return Partition({upto(-2), iv(-1, -1), iv(0, 0), from(1)});
}

// Example exRaf: Delta = {[3,4] -> q1, [-3,2] -> q2, f(q1,q2) -> qf}
Lta ex_raf() {
  Lta a;
  a.syms.passive["f"] = 2;
  a.add_lambda(iv(3, 4), "q1");
  a.add_lambda(iv(-3, 2), "q2");
  a.add_ground("f", {"q1", "q2"}, "qf");
  a.add_final("qf");
  return a;
}

// Example ex:part input
Lta ex_part() {
  Lta a;
  a.syms.passive["f"] = 2;
  a.add_lambda(iv(-3, -1), "q1");
  a.add_lambda(iv(-5, -2), "q2");
  a.add_lambda(iv(3, 4), "q3");
  a.add_lambda(iv(-3, 2), "q4");
  a.add_ground("f", {"q1", "q2"}, "q5");
  a.add_ground("f", {"q3", "q4"}, "q6");
  a.add_ground("f", {"q5", "q6"}, "qf1");
  a.add_ground("f", {"q5", "q6"}, "qf2");
  a.add_final("qf1");
  a.add_final("qf2");
  return a;
}

std::set<Term> lang(const Lta& a, int depth, int lo, int hi) {
  EnumBounds b;
  b.max_depth = depth;
  b.atom_lo = lo;
  b.atom_hi = hi;
  return enumerate_language(a, b).terms;
}

std::set<Interval> lambdas_of(const Lta& a, const State& q) {
  std::set<Interval> out;
  for (const auto& l : a.lambdas())
    if (l.target == q) out.insert(l.value);
  return out;
}

}  // namespace

TEST_CASE("to_plta splits along blocks") {
  const Plta p = to_plta(ex_raf(), pi3());
  CHECK_FALSE(p.check().has_value());
  CHECK(lambdas_of(p.base, "q2") ==
        std::set<Interval>{iv(-3, -1), iv(0, 0), iv(1, 2)});
  CHECK(lambdas_of(p.base, "q1") == std::set<Interval>{iv(3, 4)});
  CHECK(p.base.grounds().size() == 1);
  SUBCASE("language unchanged") {
    CHECK(lang(p.base, 2, -4, 5) == lang(ex_raf(), 2, -4, 5));
  }
  SUBCASE("lambda inside one block untouched") {
    Lta a;
    a.add_lambda(iv(1, 2), "q");
    a.add_final("q");
    const Plta q = to_plta(a, pi3());
    CHECK(q.base == a);
  }
}

TEST_CASE("merge_plta fuses per state and block") {
  Lta a;
  a.add_lambda(iv(-3, -1), "q1");
  a.add_lambda(iv(-5, -2), "q1");
  a.add_final("q1");
  const Plta m = merge_plta(Plta{a, pi3()});
  CHECK(lambdas_of(m.base, "q1") == std::set<Interval>{iv(-5, -1)});
  SUBCASE("single lambda per block unchanged") {
    const Plta again = merge_plta(m);
    CHECK(again == m);
  }
  SUBCASE("language only grows") {
    const auto before = lang(a, 1, -6, 0);
    const auto after = lang(m.base, 1, -6, 0);
    for (const auto& t : before) CHECK(after.count(t) == 1);
  }
}

TEST_CASE("determinize reproduces the ex:part Delta_d") {
  const Plta d = determinize(merge_plta(to_plta(ex_part(), pi3())));

  Lta want;
  want.syms.passive["f"] = 2;
  want.add_lambda(iv(-5, -1), "q{q1,q2,q4}");
  want.add_lambda(iv(1, 4), "q{q3,q4}");
  want.add_lambda(iv(0, 0), "q{q4}");
  want.add_ground("f", {"q{q1,q2,q4}", "q{q1,q2,q4}"}, "q{q5}");
  want.add_ground("f", {"q{q3,q4}", "q{q1,q2,q4}"}, "q{q6}");
  want.add_ground("f", {"q{q3,q4}", "q{q3,q4}"}, "q{q6}");
  want.add_ground("f", {"q{q3,q4}", "q{q4}"}, "q{q6}");
  want.add_ground("f", {"q{q5}", "q{q6}"}, "q{qf1,qf2}");
  want.add_final("q{qf1,qf2}");

  CHECK(d.base == want);
  CHECK(is_deterministic(d.base));
  CHECK(d.partition == pi3());

  SUBCASE("language contains the input language") {
    const auto li = lang(ex_part(), 3, -6, 5);
    const auto ld = lang(d.base, 3, -6, 5);
    for (const auto& t : li) CHECK(ld.count(t) == 1);
  }
  SUBCASE("deterministic merged input is preserved") {
    const Plta dd = determinize(d);
    CHECK(lang(dd.base, 2, -6, 5) == lang(d.base, 2, -6, 5));
  }
  SUBCASE("empty automaton stays empty") {
    Lta none;
    none.syms.passive["f"] = 2;
    const Plta dn = determinize(to_plta(none, pi3()));
    CHECK(is_empty(dn.base));
  }
}

TEST_CASE("minimize") {
  SUBCASE("context-equivalent states collapse with lub fusion") {
    Lta a;
    a.syms.passive["f"] = 1;
    a.add_lambda(iv(1, 2), "qa");
    a.add_lambda(iv(5, 6), "qb");
    a.add_ground("f", {"qa"}, "qf");
    a.add_ground("f", {"qb"}, "qf");
    a.add_final("qf");
    REQUIRE(is_deterministic(a));
    const Plta m = minimize(Plta{a, Partition::trivial()});
    CHECK(m.base.states.size() == 2);
    REQUIRE(m.base.lambdas().size() == 1);
    CHECK(m.base.lambdas()[0].value == iv(1, 6));
    // upper approximation, never a loss
    const auto before = lang(a, 2, 0, 7);
    const auto after = lang(m.base, 2, 0, 7);
    for (const auto& t : before) CHECK(after.count(t) == 1);
    CHECK(after.count(Term::app("f", {Term::abs(Interval::atom(3))})) == 1);
  }
  SUBCASE("already-minimal keeps its states") {
    const Plta d = determinize(merge_plta(to_plta(ex_part(), pi3())));
    const Plta m = minimize(d);
    CHECK(m.base.states.size() == d.base.states.size());
    CHECK(is_deterministic(m.base));
  }
  SUBCASE("rejects nondeterministic input") {
    Lta bad;
    bad.add_lambda(iv(1, 3), "q1");
    bad.add_lambda(iv(2, 5), "q2");
    bad.add_final("q1");
    CHECK_THROWS_AS(minimize(Plta{bad, Partition::trivial()}),
                    EngineError);
  }
}

TEST_CASE("refine_partition reproduces the section 3.7 Delta_2") {
  const Plta p1 = to_plta(ex_part(), pi3());
  const Plta p2 = refine_partition(p1, pi4());

  CHECK(p2.partition == pi4());
  CHECK(lambdas_of(p2.base, "q1") ==
        std::set<Interval>{iv(-3, -2), iv(-1, -1)});
  CHECK(lambdas_of(p2.base, "q2") == std::set<Interval>{iv(-5, -2)});
  CHECK(lambdas_of(p2.base, "q3") == std::set<Interval>{iv(3, 4)});
  CHECK(lambdas_of(p2.base, "q4") ==
        std::set<Interval>{iv(-3, -2), iv(-1, -1), iv(0, 0), iv(1, 2)});
  CHECK(p2.base.lambdas().size() == 8);
  CHECK(p2.base.grounds().size() == 4);
  CHECK(p2.base.grounds() == p1.base.grounds());

  SUBCASE("language exactly preserved") {
    CHECK(lang(p2.base, 3, -6, 5) == lang(p1.base, 3, -6, 5));
  }
  SUBCASE("same partition is a no-op") {
    const Plta same = refine_partition(p1, pi3());
    CHECK(same == p1);
  }
  SUBCASE("non-refinement rejected") {
    const Plta fine = to_plta(ex_part(), pi4());
    CHECK_THROWS_AS(refine_partition(fine, pi3()), EngineError);
  }
}

TEST_CASE("determinization is monotone in the partition") {
  // finer partition, tighter language
  const Plta coarse = determinize(merge_plta(to_plta(ex_part(), pi3())));
  const Plta fine = determinize(merge_plta(to_plta(ex_part(), pi4())));
  const auto lc = lang(coarse.base, 3, -6, 5);
  const auto lf = lang(fine.base, 3, -6, 5);
  for (const auto& t : lf) CHECK(lc.count(t) == 1);
  // and strictly tighter here: [-1,-1] no longer merges with [-5,-2]
  const Term probe = Term::app(
      "f", {Term::app("f", {Term::abs(Interval::atom(-1)),
                            Term::abs(Interval::atom(-1))}),
            Term::app("f", {Term::abs(Interval::atom(3)),
                            Term::abs(Interval::atom(0))})});
  CHECK(coarse.base.member(probe));
  CHECK_FALSE(fine.base.member(probe));
}

TEST_CASE("determinize output is merged") {
  const Plta d = determinize(merge_plta(to_plta(ex_part(), pi3())));
  // one lambda per (state, block)
  std::set<std::pair<State, std::size_t>> seen;
  for (const auto& l : d.base.lambdas()) {
    const auto s = d.partition.split(l.value);
    REQUIRE(s.size() == 1);  // each value inside a single block
    CHECK(seen.insert({l.target, s[0].first}).second);
  }
}
