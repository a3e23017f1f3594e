// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lta/interval.hpp"
#include "lta/partition.hpp"
#include "lta/term.hpp"

namespace lta {

// raised on semantic failures the CLI maps to exit code 1
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using State = std::string;
using StateSet = std::set<State, NaturalLess>;
using EpsClosure = std::map<State, StateSet, NaturalLess>;

struct SymbolTable {
  std::map<std::string, int> passive;
  std::map<std::string, int> builtins;

  bool knows(const std::string& name) const {
    return passive.count(name) || builtins.count(name);
  }
  std::optional<int> arity_of(const std::string& name) const;
  // arity conflicts are errors
  void merge(const SymbolTable& other);
  bool operator==(const SymbolTable&) const = default;
};

struct LambdaTr {
  Interval value;
  State target;
  auto key() const { return std::tie(target, value); }
  bool operator==(const LambdaTr& b) const { return key() == b.key(); }
  bool operator<(const LambdaTr& b) const {
    if (natural_less(target, b.target)) return true;
    if (natural_less(b.target, target)) return false;
    return value < b.value;
  }
};

struct GroundTr {
  std::string head;
  std::vector<State> args;
  State target;
  bool operator==(const GroundTr& b) const {
    return head == b.head && args == b.args && target == b.target;
  }
  bool operator<(const GroundTr& b) const;
};

struct EpsTr {
  State from, to;
  bool operator==(const EpsTr& b) const {
    return from == b.from && to == b.to;
  }
  bool operator<(const EpsTr& b) const {
    if (natural_less(from, b.from)) return true;
    if (natural_less(b.from, from)) return false;
    return natural_less(to, b.to);
  }
};

// Bottom-up tree automaton whose leaves carry lattice values: Lambda
// transitions inject interval values into states, Ground transitions run
// the term structure, Epsilon transitions appear during completion.
// Transition sets are kept sorted and deduplicated, so automata compare
// by value and serialize deterministically.
class Lta {
 public:
  std::string name = "A";
  SymbolTable syms;
  StateSet states;
  StateSet finals;

  const std::vector<LambdaTr>& lambdas() const { return lambdas_; }
  const std::vector<GroundTr>& grounds() const { return grounds_; }
  const std::vector<EpsTr>& epsilons() const { return epsilons_; }

  void add_state(const State& q) { states.insert(q); }
  void add_final(const State& q);
  // each add_* registers the states it mentions
  void add_lambda(Interval v, State target);
  void add_ground(std::string head, std::vector<State> args, State target);
  void add_epsilon(State from, State to);
  bool has_ground(const std::string& head, const std::vector<State>& args,
                  const State& target) const;
  // target of existing ground transitions with this left-hand side
  std::vector<State> ground_targets(const std::string& head,
                                    const std::vector<State>& args) const;
  void remove_lambdas_of(const State& target);

  // rename q2 into q1 everywhere (equation merging); q2 disappears
  void merge_states(const State& q1, const State& q2);
  State fresh_state(const std::string& base) const;

  // maps q to every state reachable from q through epsilon steps, incl. q
  EpsClosure eps_closure() const;

  // alphabet/arity/endpoint checks; nullopt when well-formed
  std::optional<std::string> validate() const;

  // Def. 3: all states t runs to. t may be a configuration (states, integer
  // constants and interval leaves are all legal). The closure overload reuses
  // a precomputed eps_closure() across many queries against one automaton.
  StateSet reaches(const Term& t) const;
  StateSet reaches(const Term& t, const EpsClosure& clo) const;
  // Def. 4 membership for ground atom-leaf terms; throws on other terms
  bool member(const Term& t) const;

  bool operator==(const Lta& b) const {
    return states == b.states && finals == b.finals && lambdas_ == b.lambdas_ &&
           grounds_ == b.grounds_ && epsilons_ == b.epsilons_;
  }

 private:
  std::vector<LambdaTr> lambdas_;
  std::vector<GroundTr> grounds_;
  std::vector<EpsTr> epsilons_;
};

// language-preserving epsilon elimination: u -> q' copies to u -> q for
// every q in the closure of q'
Lta eliminate_epsilons(const Lta& a);

// disjoint state renaming (collisions get primes), then componentwise union
Lta lta_union(const Lta& a, const Lta& b);

// product over epsilon-eliminated inputs; lambda pairs meet by glb
Lta intersection(const Lta& a, const Lta& b);

// keep only accessible states (paper's reduction); epsilon propagates marking
Lta reduce(const Lta& a);

bool is_empty(const Lta& a);

// no epsilons, ground left-hand sides map to one target, overlapping lambda
// values map to one target
bool is_deterministic(const Lta& a);

// Completion to a sink state, then final-set flip. Requires deterministic
// epsilon-free input. Exact over all atom-leaf ground terms: uncovered
// lambda gaps are computed per partition block and routed to the sink.
Lta complement(const Lta& a, const Partition& p = Partition::trivial());

struct InclusionResult {
  bool included = false;
  // true when b had to be determinized (language possibly widened):
  // included=true then answers "a subset of an over-approximation of b";
  // included=false is definitive either way
  bool approximate = false;
};
InclusionResult included_in(const Lta& a, const Lta& b,
                            const Partition& p = Partition::trivial());

// one accepted ground term with integer leaves, built bottom-up over lambda,
// passive ground, and epsilon transitions; nullopt when the language is empty
std::optional<Term> sample_member(const Lta& a);

}  // namespace lta
