// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Constraint solving over interval boxes: Fourier-Motzkin projection of the
// rational relaxation, closed integer hull per variable (Solve_L and Solve).

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lta/automaton.hpp"
#include "lta/interval.hpp"
#include "lta/rewriting.hpp"

namespace lta {

struct NonLinearConstraint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// variable -> interval; a missing variable is unconstrained
using Box = std::map<std::string, Interval>;

struct ConstraintSystem {
  std::vector<Predicate> conjuncts;
};

// Relaxed reproduces the paper: strict bounds survive as closure endpoints
// ({x>3, x<7} over a wide box gives [3,7]). StrictInt tightens a*x < b to
// a*x <= b-1 first, which yields [4,6] for the same system.
enum class SolverMode { Relaxed, StrictInt };

// nullopt = Empty (no rational solution, or a disequality pinned exactly)
std::optional<Box> solve_box(const ConstraintSystem& c, const Box& input,
                             SolverMode mode = SolverMode::Relaxed);

bool satisfiable(const ConstraintSystem& c, const Box& input,
                 SolverMode mode = SolverMode::Relaxed);

// one constrained variable after solving: the state sigma bound, the lambda
// value the tuple picked for it, and the solved interval
struct SolvedVar {
  State state;
  Interval from;
  Interval value;

  bool operator==(const SolvedVar& o) const {
    return state == o.state && from == o.from && value == o.value;
  }
};

struct Solution {
  std::map<std::string, State> states;      // unconstrained vars keep states
  std::map<std::string, SolvedVar> solved;  // constrained vars

  bool operator==(const Solution& o) const {
    return states == o.states && solved == o.solved;
  }
};

// per-tuple union over the lambda values reaching each constrained variable's
// state (through epsilon closure), in canonical enumeration order; the
// closure overload reuses a precomputed eps_closure() across many calls
std::vector<Solution> solve(const std::map<std::string, State>& sigma,
                            const Lta& a, const ConstraintSystem& c,
                            SolverMode mode = SolverMode::Relaxed);
std::vector<Solution> solve(const std::map<std::string, State>& sigma,
                            const Lta& a, const ConstraintSystem& c,
                            SolverMode mode, const EpsClosure& closure);

}  // namespace lta
