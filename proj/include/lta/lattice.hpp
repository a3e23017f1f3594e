// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "lta/interval.hpp"

namespace lta {

// The lattice contract every leaf domain must model. The shipped working
// instance is Interval; Powerset3 below exists so the lattice laws can be
// checked exhaustively on a finite domain.
template <class L>
concept LatticeElement = requires(const L a, const L b) {
  { L::bottom() } -> std::same_as<L>;
  { L::top() } -> std::same_as<L>;
  { a.is_bottom() } -> std::convertible_to<bool>;
  { a.leq(b) } -> std::convertible_to<bool>;
  { a.lub(b) } -> std::same_as<L>;
  { a.glb(b) } -> std::same_as<L>;
  { a.widen(b) } -> std::same_as<L>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

// Subsets of {0,1,2} ordered by inclusion. Finite height, so widen = lub.
struct Powerset3 {
  std::uint8_t bits = 0;

  static Powerset3 bottom() { return {0}; }
  static Powerset3 top() { return {7}; }
  static Powerset3 of(std::uint8_t b) { return {static_cast<std::uint8_t>(b & 7)}; }

  bool is_bottom() const { return bits == 0; }
  bool leq(const Powerset3& b) const { return (bits & ~b.bits) == 0; }
  Powerset3 lub(const Powerset3& b) const { return of(bits | b.bits); }
  Powerset3 glb(const Powerset3& b) const { return of(bits & b.bits); }
  Powerset3 widen(const Powerset3& b) const { return lub(b); }
  bool operator==(const Powerset3& b) const { return bits == b.bits; }
  std::string to_string() const {
    std::string s = "{";
    for (int i = 0; i < 3; i++)
      if (bits & (1 << i)) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
  }
};

static_assert(LatticeElement<Interval>);
static_assert(LatticeElement<Powerset3>);

}  // namespace lta
