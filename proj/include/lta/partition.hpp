// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lta/interval.hpp"

namespace lta {

// A finite sequence of non-bottom intervals that covers Z exactly: sorted,
// pairwise disjoint, gap-free, first block open to -inf, last to +inf.
class Partition {
 public:
  // throws std::invalid_argument when check() reports a violation
  explicit Partition(std::vector<Interval> blocks);

  // nullopt when well-formed, otherwise a description of the violation
  static std::optional<std::string> check(const std::vector<Interval>& blocks);

  static Partition trivial();  // single block = top

  const std::vector<Interval>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  // Blocks intersecting v, with the meet per block. Bottom input -> empty.
  std::vector<std::pair<std::size_t, Interval>> split(const Interval& v) const;

  std::size_t block_index_of(const Int& k) const;

  // every block of *this lies inside a block of coarser
  bool refines(const Partition& coarser) const;

  std::string to_string() const;
  bool operator==(const Partition& b) const { return blocks_ == b.blocks_; }

 private:
  std::vector<Interval> blocks_;
};

}  // namespace lta
