// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lta/automaton.hpp"
#include "lta/partition.hpp"

namespace lta {

// An LTA whose every Lambda value fits inside a single partition block.
struct Plta {
  Lta base;
  Partition partition = Partition::trivial();

  std::optional<std::string> check() const;
  bool operator==(const Plta& b) const {
    return base == b.base && partition == b.partition;
  }
};

// split every Lambda value along the block boundaries
Plta to_plta(const Lta& a, const Partition& p);

// fuse Lambda values per (target, block) by lub; states are untouched
Plta merge_plta(const Plta& a);

// Subset-style determinization: one state per block with the fused lambda,
// then ground saturation. Requires epsilon-free input. The result is a
// deterministic merged PLTA recognizing a superset of the input language.
Plta determinize(const Plta& a);

// Refine-based minimization of a deterministic epsilon-free PLTA: states
// are equivalent when no ground context and no block-level lambda presence
// distinguishes them. Lambda values into a merged class fuse by lub per
// block.
Plta minimize(const Plta& a);

// re-split the lambdas along a finer partition; language unchanged
Plta refine_partition(const Plta& a, const Partition& finer);

}  // namespace lta
