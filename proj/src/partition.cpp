// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lta/partition.hpp"

#include <stdexcept>

namespace lta {

Partition::Partition(std::vector<Interval> blocks) : blocks_(std::move(blocks)) {
  if (auto err = check(blocks_)) throw std::invalid_argument("partition: " + *err);
}

std::optional<std::string> Partition::check(const std::vector<Interval>& blocks) {
  if (blocks.empty()) return "no blocks";
  for (const auto& b : blocks)
    if (b.is_bottom()) return "bottom block";
  if (blocks.front().lo().finite())
    return "does not cover -inf (first block starts at " +
           blocks.front().lo().value().str() + ")";
  if (blocks.back().hi().finite())
    return "does not cover +inf (last block ends at " +
           blocks.back().hi().value().str() + ")";
  for (std::size_t i = 0; i + 1 < blocks.size(); i++) {
    const Bound& hi = blocks[i].hi();
    const Bound& lo = blocks[i + 1].lo();
    if (!hi.finite() || !lo.finite())
      return "interior block reaches infinity at index " + std::to_string(i);
    if (lo.value() != hi.value() + 1)
      return blocks[i].to_string() + " and " + blocks[i + 1].to_string() +
             (lo.value() <= hi.value() ? " overlap" : " leave a gap");
  }
  return std::nullopt;
}

Partition Partition::trivial() { return Partition({Interval::top()}); }

std::vector<std::pair<std::size_t, Interval>> Partition::split(
    const Interval& v) const {
  std::vector<std::pair<std::size_t, Interval>> out;
  if (v.is_bottom()) return out;
  for (std::size_t i = 0; i < blocks_.size(); i++) {
    Interval m = blocks_[i].glb(v);
    if (!m.is_bottom()) out.emplace_back(i, std::move(m));
  }
  return out;
}

std::size_t Partition::block_index_of(const Int& k) const {
  for (std::size_t i = 0; i < blocks_.size(); i++)
    if (blocks_[i].contains(k)) return i;
  throw std::logic_error("partition does not cover " + k.str());
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& b : blocks_) {
    bool inside = false;
    for (const auto& c : coarser.blocks_)
      if (b.leq(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    if (!s.empty()) s += " ";
    s += b.to_string();
  }
  return s;
}

}  // namespace lta
