// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force ground truth for tests: naive membership by direct recursion,
// bounded language enumeration, and the Peano addition benchmark.

#pragma once

#include <set>
#include <vector>

#include "lta/automaton.hpp"
#include "lta/term.hpp"

namespace lta {

// membership by direct recursion over the transition lists; deliberately
// avoids the engine's reach/closure machinery
bool naive_member(const Lta& a, const Term& t);

struct EnumBounds {
  std::size_t max_depth = 3;
  Int atom_lo = 0;
  Int atom_hi = 0;
  std::size_t max_terms = 100000;
};

struct EnumResult {
  std::set<Term> terms;
  bool truncated = false;  // candidate pool hit max_terms
};

// all accepted atom-leaf terms over the passive alphabet within bounds;
// the default entry point filters candidates in parallel when available
EnumResult enumerate_language(const Lta& a, const EnumBounds& b);
EnumResult enumerate_language_serial(const Lta& a, const EnumBounds& b);

struct PeanoBench {
  std::size_t peano_steps = 0;
  std::size_t builtin_steps = 0;
  Int peano_value = 0;
  Int builtin_value = 0;
};

// x + y once through the Peano xadd rule set and once through eval
PeanoBench peano_benchmark(const Int& x, const Int& y);

}  // namespace lta
