// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "lta/parser.hpp"

using namespace lta;

namespace {

Interval iv(int lo, int hi) { return Interval::closed(lo, hi); }
Interval from(int lo) { return Interval::of(Bound::of(lo), Bound::pos_inf()); }
Interval upto(int hi) { return Interval::of(Bound::neg_inf(), Bound::of(hi)); }

std::string specs(const std::string& name) {
  return std::string(LTA_SPECS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parse the shipped running example") {
  const SpecFile s = parse_spec_file(specs("running.lta"));
  CHECK(s.syms.passive.at("f") == 1);
  CHECK(s.syms.passive.at("cons") == 2);
  CHECK(s.syms.builtins.at("+") == 2);
  REQUIRE(s.automata.size() == 1);
  CHECK(s.automata[0].first == "init");
  const Lta& a = s.automata[0].second;
  CHECK(a.finals == StateSet{"q2"});
  REQUIRE(a.lambdas().size() == 1);
  CHECK(a.lambdas()[0].value == iv(1, 2));
  REQUIRE(s.trss.size() == 1);
  CHECK(s.trss[0].rules.size() == 2);
  CHECK(s.trss[0].rules[0].conditions.size() == 1);
  REQUIRE(s.eqsets.size() == 1);
  CHECK(s.eqsets[0].equations.size() == 1);
  CHECK(s.config.widen_after == 3);
  CHECK(s.config.strict_int);
  CHECK_FALSE(s.partition.has_value());
}

TEST_CASE("parse the remaining shipped files") {
  SUBCASE("expart carries a partition") {
    const SpecFile s = parse_spec_file(specs("expart.lta"));
    REQUIRE(s.partition.has_value());
    CHECK(s.partition->blocks() ==
          std::vector<Interval>{upto(-1), iv(0, 0), from(1)});
    REQUIRE(s.automata.size() == 1);
    CHECK(s.automata[0].second.lambdas().size() == 4);
    CHECK(s.automata[0].second.grounds().size() == 4);
    CHECK(s.automata[0].second.finals.size() == 2);
  }
  SUBCASE("refined is partition-only") {
    const SpecFile s = parse_spec_file(specs("refined.lta"));
    REQUIRE(s.partition.has_value());
    CHECK(s.partition->size() == 4);
    CHECK(s.automata.empty());
  }
  SUBCASE("safety picks its automaton by config") {
    const SpecFile s = parse_spec_file(specs("safety.lta"));
    CHECK(s.automata.size() == 2);
    CHECK(s.pick_automaton == "init");
    CHECK(s.find_automaton("bad") != nullptr);
    CHECK(s.find_automaton("nope") == nullptr);
  }
  SUBCASE("lists uses a nullary symbol") {
    const SpecFile s = parse_spec_file(specs("lists.lta"));
    const Lta& a = s.automata[0].second;
    bool nil_ground = false;
    for (const auto& g : a.grounds())
      if (g.head == "nil" && g.args.empty()) nil_ground = true;
    CHECK(nil_ground);
  }
}

TEST_CASE("interval literals") {
  const char* hdr = "lattice interval-int\nautomaton a {\n  states q\n  final q\n";
  auto lam = [&](const std::string& lit) {
    const SpecFile s =
        parse_spec_text(std::string(hdr) + "  " + lit + " -> q\n}\n", "t");
    return s.automata[0].second.lambdas()[0].value;
  };
  CHECK(lam("[2,4]") == iv(2, 4));
  CHECK(lam("[-3,-1]") == iv(-3, -1));
  // open bounds normalize to the closed integer hull
  CHECK(lam("]-inf,0[") == upto(-1));
  CHECK(lam("]0,+inf[") == from(1));
  CHECK(lam("]1,4]") == iv(2, 4));
  CHECK(lam("[1,4[") == iv(1, 3));
  CHECK(lam("]-inf,+inf[") == Interval::top());
  CHECK_THROWS_AS(lam("[5,2]"), ParseError);     // empty interval
  CHECK_THROWS_AS(lam("[-inf,3]"), ParseError);  // closed infinite bound
  CHECK_THROWS_AS(lam("[3,+inf]"), ParseError);
  CHECK_THROWS_AS(lam("]3,4["), ParseError);     // ]3,4[ holds no integer
}

TEST_CASE("diagnostics carry position and cause") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      parse_spec_text(text, "t");
      FAIL_CHECK("expected a ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
      CHECK(e.line >= 1);
      CHECK(e.col >= 1);
    }
  };
  fails_with("", "missing lattice declaration");
  fails_with("symbols { f:1 }\n", "expected 'lattice' declaration first");
  fails_with("lattice interval-real\n", "unknown lattice");
  fails_with("lattice interval-int\nsymbols { f:1 f:2 }\n",
             "duplicate symbol 'f'");
  fails_with("lattice interval-int\nbuiltins { f:2 }\n", "unknown builtin");
  fails_with("lattice interval-int\nbuiltins { +:3 }\n", "arity");
  fails_with(
      "lattice interval-int\nautomaton a {\n  states q q\n  final q\n}\n",
      "already declared at line");
  fails_with(
      "lattice interval-int\nautomaton a {\n  states q\n  final q\n"
      "  g(q) -> q\n}\n",
      "unknown symbol 'g'");
  fails_with("lattice interval-int\nconfig { widen-later 3 }\n",
             "unknown config key");
  fails_with("lattice interval-int\nlattice interval-int\n",
             "duplicate lattice declaration");
  fails_with("lattice interval-int\nautomaton a {\n", "expected");
}

TEST_CASE("positions are exact") {
  try {
    parse_spec_text("lattice interval-int\nsymbols { f:1 }\nwat\n", "t");
    FAIL_CHECK("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 1);
    CHECK(std::string(e.what()).find("t:3:1") != std::string::npos);
  }
}

TEST_CASE("statements split on semicolons as well as newlines") {
  const SpecFile s = parse_spec_text(
      "lattice interval-int\nsymbols { f:1 }\n"
      "automaton a { states q1; final q1; [1,2] -> q1; f(q1) -> q1 }\n",
      "t");
  const Lta& a = s.automata[0].second;
  CHECK(a.lambdas().size() == 1);
  CHECK(a.grounds().size() == 1);
}

TEST_CASE("epsilon vs nullary ground disambiguation") {
  const SpecFile s = parse_spec_text(
      "lattice interval-int\nsymbols { nil:0 }\n"
      "automaton a {\n  states q1 q2\n  final q2\n"
      "  nil -> q1\n  q1 -> q2\n}\n",
      "t");
  const Lta& a = s.automata[0].second;
  REQUIRE(a.grounds().size() == 1);
  CHECK(a.grounds()[0].head == "nil");
  REQUIRE(a.epsilons().size() == 1);
  CHECK(a.epsilons()[0].from == "q1");
  CHECK(a.epsilons()[0].to == "q2");
}

TEST_CASE("parse_term") {
  SymbolTable syms;
  syms.passive["cons"] = 2;
  syms.passive["nil"] = 0;
  syms.builtins["+"] = 2;
  const Term t = parse_term("cons(1 + 1, cons([2,2], nil))", syms);
  CHECK(t == Term::app("cons",
                       {Term::op("+", {Term::intconst(1), Term::intconst(1)}),
                        Term::app("cons", {Term::abs(iv(2, 2)),
                                           Term::app("nil", {})})}));
  CHECK_THROWS_AS(parse_term("cons(x, nil)", syms), ParseError);
  CHECK_THROWS_AS(parse_term("cons(1)", syms), ParseError);
}

TEST_CASE("round trip: parse after print reproduces the automaton") {
  for (const char* f :
       {"running.lta", "example_run.lta", "lists.lta", "expart.lta",
        "safety.lta"}) {
    const SpecFile s = parse_spec_file(specs(f));
    for (const auto& [name, a] : s.automata) {
      const SpecFile back = parse_spec_text(to_spec_file(a, s.partition), f);
      REQUIRE(back.automata.size() == 1);
      CHECK(back.automata[0].second == a);
      CHECK(back.automata[0].first == name);
      CHECK(back.syms == a.syms);
      if (s.partition.has_value()) {
        REQUIRE(back.partition.has_value());
        CHECK(*back.partition == *s.partition);
      }
    }
  }
}

TEST_CASE("round trip survives completion-generated names") {
  // q!n fresh states, q[k,k] value states, q{a,b} subset states
  Lta a;
  a.syms.passive["f"] = 1;
  a.syms.builtins["+"] = 2;
  a.add_lambda(iv(1, 1), "q[1,1]");
  a.add_lambda(from(5), "q!8");
  a.add_lambda(upto(0), "q{q1,q2}");
  a.add_ground("+", {"q!8", "q[1,1]"}, "q!8");
  a.add_ground("f", {"q{q1,q2}"}, "q!9");
  a.add_epsilon("q!9", "q!8");
  a.add_final("q!8");
  const SpecFile back = parse_spec_text(to_spec_file(a), "gen");
  REQUIRE(back.automata.size() == 1);
  CHECK(back.automata[0].second == a);
}

TEST_CASE("to_dot shape") {
  const SpecFile s = parse_spec_file(specs("example_run.lta"));
  const std::string dot = to_dot(s.automata[0].second);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);  // final q2
  CHECK(dot.find("[0,4]") != std::string::npos);         // lambda box
  CHECK(dot.find("label=\"f\"") != std::string::npos);   // unary ground edge
}

TEST_CASE("config block") {
  const SpecFile s = parse_spec_text(
      "lattice interval-int\nsymbols { f:1 }\n"
      "config {\n  widen-after 5\n  max-steps 17\n  strict-int off\n}\n",
      "t");
  CHECK(s.config.widen_after == 5);
  CHECK(s.config.max_steps == 17);
  CHECK_FALSE(s.config.strict_int);
}
