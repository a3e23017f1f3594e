// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Tree automata completion: matching, critical pairs, normalization,
// equational merging, evaluation with widening, and the fixpoint loop.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lta/automaton.hpp"
#include "lta/rewriting.hpp"
#include "lta/solver.hpp"

namespace lta {

struct CompletionConfig {
  std::size_t max_steps = 100;
  // per-state distinct-lambda threshold inside eval; also the step index
  // after which equation-touched states are widened eagerly
  std::size_t widen_after = 3;
  EquationSet equations;
  bool strict_int = false;

  SolverMode mode() const {
    return strict_int ? SolverMode::StrictInt : SolverMode::Relaxed;
  }
};

// mutable bookkeeping threaded through one completion run
struct CompletionState {
  Lta current;
  std::size_t step = 0;
  std::size_t fresh_counter = 1;
  std::map<Interval, State> value_states;       // q[k,k] registry
  std::map<State, std::size_t> lambda_adds;     // counters of the last eval
  std::size_t eval_passes = 0;                  // propag passes of the last eval
  StateSet equation_touched;                    // merge survivors, this step
  std::vector<std::string> trace;

  State fresh();
  // the state recognizing exactly v, created on first use
  State value_state(const Interval& v);
};

// all sigma (vars -> states) with l sigma ->* q, Unfold/Clash/Config style;
// the closure overload reuses a precomputed eps_closure() across queries
std::vector<std::map<std::string, State>> matching(const Term& l, const Lta& a,
                                                   const State& q);
std::vector<std::map<std::string, State>> matching(const Term& l, const Lta& a,
                                                   const State& q,
                                                   const EpsClosure& closure);

// matching restricted by the condition solver, minus substitutions whose
// instantiated rhs is already recognized at q; values are state or interval
// leaves (the state form is kept when solving did not shrink the lambda)
std::vector<TermSubst> omega(const Lta& a, const RewriteRule& rule,
                             const State& q,
                             SolverMode mode = SolverMode::Relaxed);
std::vector<TermSubst> omega(const Lta& a, const RewriteRule& rule,
                             const State& q, SolverMode mode,
                             const EpsClosure& closure);

struct CriticalPair {
  std::size_t rule_index = 0;
  State target;
  TermSubst sigma;

  bool operator==(const CriticalPair& o) const {
    return rule_index == o.rule_index && target == o.target && sigma == o.sigma;
  }
};

// every (rule, state, omega substitution) triple against a fixed automaton,
// in canonical order: rule file order, state natural order, substitution order
std::vector<CriticalPair> critical_pairs(const Lta& a, const Trs& r,
                                         SolverMode mode = SolverMode::Relaxed);
// single-threaded reference for the parallel kernel
std::vector<CriticalPair> critical_pairs_serial(
    const Lta& a, const Trs& r, SolverMode mode = SolverMode::Relaxed);

// Def. 8 normalization of one rhs instance into st.current, top transition
// aimed at target; subterm states are reused on exact match, else fresh
void normalize(const Term& rhs_instance, const State& target,
               CompletionState& st);

// one completion step C_R: materialize every critical pair with a fresh
// primed state, its normalized rhs, and an epsilon into the pair's target
Lta one_step(const Lta& a, const Trs& r, CompletionState& st,
             SolverMode mode = SolverMode::Relaxed);

// merge states equal modulo the equation set, one canonical merge at a time,
// to fixpoint; survivors are recorded in st.equation_touched
Lta apply_equations(const Lta& a, const EquationSet& e, CompletionState& st,
                    SolverMode mode = SolverMode::Relaxed);

// one propagation pass: eval# over argument lambda tuples of builtin ground
// transitions, adding unsubsumed results at the target
Lta propag(const Lta& a);

// propag to fixpoint with widening; force_widen states are widened on their
// first addition instead of after widen_after distinct ones
Lta eval_automaton(const Lta& a, const CompletionConfig& cfg);
Lta eval_automaton(const Lta& a, const CompletionConfig& cfg,
                   CompletionState& st, const StateSet& force_widen);

struct CompletionResult {
  Lta automaton;
  bool converged = false;
  std::size_t steps = 0;  // index k of the fixpoint A^k = A^(k+1)
  std::vector<std::string> trace;
};

CompletionResult complete(const Lta& a, const Trs& r,
                          const CompletionConfig& cfg);

struct Verdict {
  bool safe = false;
  std::optional<Term> witness;  // possibly spurious, Unknown only
  CompletionResult completion;
};

// Safe when completion converged and the result misses `bad` entirely
Verdict check_reachability(const Lta& a0, const Lta& bad, const Trs& r,
                           const CompletionConfig& cfg);

}  // namespace lta
