// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lta/ints.hpp"

namespace lta {

enum class BoundKind { NegInf, Finite, PosInf };

// An integer endpoint extended with the two infinities.
class Bound {
 public:
  Bound() : kind_(BoundKind::Finite), v_(0) {}
  static Bound neg_inf() { return Bound(BoundKind::NegInf); }
  static Bound pos_inf() { return Bound(BoundKind::PosInf); }
  static Bound of(Int v) { return Bound(std::move(v)); }

  BoundKind kind() const { return kind_; }
  bool finite() const { return kind_ == BoundKind::Finite; }
  const Int& value() const { return v_; }

  // total order with NegInf < finite < PosInf
  static int cmp(const Bound& a, const Bound& b);
  bool operator==(const Bound& b) const { return cmp(*this, b) == 0; }
  bool operator<(const Bound& b) const { return cmp(*this, b) < 0; }
  bool operator<=(const Bound& b) const { return cmp(*this, b) <= 0; }

  Bound operator+(const Bound& b) const;
  Bound operator-() const;
  // Bound product with the convention 0 * inf = 0 (abstract multiplication
  // must not lose the zero annihilator).
  static Bound mul(const Bound& a, const Bound& b);

 private:
  explicit Bound(BoundKind k) : kind_(k), v_(0) {}
  explicit Bound(Int v) : kind_(BoundKind::Finite), v_(std::move(v)) {}
  BoundKind kind_;
  Int v_;
};

// Interval over the integers with optional infinite endpoints; the canonical
// representation is closed at finite bounds ("]0,+inf[" parses, then
// normalizes to lo = 1). Bottom is a distinguished element, never [a,b] with
// a > b.
class Interval {
 public:
  Interval() : bot_(true) {}  // bottom

  static Interval bottom() { return Interval(); }
  static Interval top() { return of(Bound::neg_inf(), Bound::pos_inf()); }
  static Interval atom(Int k) {
    return of(Bound::of(k), Bound::of(std::move(k)));
  }
  static Interval closed(Int lo, Int hi) {
    return of(Bound::of(std::move(lo)), Bound::of(std::move(hi)));
  }
  // lo > hi collapses to bottom
  static Interval of(Bound lo, Bound hi);

  bool is_bottom() const { return bot_; }
  bool is_top() const {
    return !bot_ && !lo_.finite() && !hi_.finite();
  }
  bool is_atom() const {
    return !bot_ && lo_.finite() && hi_.finite() && lo_.value() == hi_.value();
  }
  // precondition: not bottom
  const Bound& lo() const { return lo_; }
  const Bound& hi() const { return hi_; }

  bool contains(const Int& k) const;
  bool leq(const Interval& b) const;
  Interval lub(const Interval& b) const;
  Interval glb(const Interval& b) const;
  // standard interval widening: unstable bounds jump to infinity
  Interval widen(const Interval& b) const;

  Interval add(const Interval& b) const;
  Interval sub(const Interval& b) const;
  Interval mul(const Interval& b) const;

  std::string to_string() const;

  bool operator==(const Interval& b) const;
  bool operator!=(const Interval& b) const { return !(*this == b); }
  // canonical order for sorted transition sets: bottom first, then (lo, hi)
  bool operator<(const Interval& b) const;

 private:
  bool bot_;
  Bound lo_, hi_;
};

// Galois abstraction of a single integer: alpha(k) = [k,k].
inline Interval alpha(Int k) { return Interval::atom(std::move(k)); }

struct AtomRange {
  std::vector<Int> values;
  bool truncated = false;  // interval was infinite or wider than the cap
};

// The atoms [k,k] contained in v, capped; oracle enumeration feeds on this.
AtomRange atoms_within(const Interval& v, std::size_t cap);

}  // namespace lta
