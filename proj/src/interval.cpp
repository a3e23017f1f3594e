// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#include "lta/interval.hpp"

#include <cctype>
#include <stdexcept>

namespace lta {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    char ca = a[i], cb = b[j];
    bool da = std::isdigit(static_cast<unsigned char>(ca));
    bool db = std::isdigit(static_cast<unsigned char>(cb));
    if (da && db) {
      std::size_t si = i, sj = j;
      while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) i++;
      while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) j++;
      // strip leading zeros for value comparison
      std::size_t zi = si, zj = sj;
      while (zi < i - 1 && a[zi] == '0') zi++;
      while (zj < j - 1 && b[zj] == '0') zj++;
      std::size_t la = i - zi, lb = j - zj;
      if (la != lb) return la < lb;
      int c = a.compare(zi, la, b, zj, lb);
      if (c != 0) return c < 0;
      if (i - si != j - sj) return (i - si) < (j - sj);
    } else {
      if (ca != cb) return ca < cb;
      i++;
      j++;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

int Bound::cmp(const Bound& a, const Bound& b) {
  if (a.kind_ == b.kind_) {
    if (a.kind_ != BoundKind::Finite) return 0;
    if (a.v_ == b.v_) return 0;
    return a.v_ < b.v_ ? -1 : 1;
  }
  auto rank = [](BoundKind k) {
    return k == BoundKind::NegInf ? 0 : (k == BoundKind::Finite ? 1 : 2);
  };
  return rank(a.kind_) < rank(b.kind_) ? -1 : 1;
}

Bound Bound::operator+(const Bound& b) const {
  if (finite() && b.finite()) return of(v_ + b.v_);
  // callers never add opposite infinities
  const Bound& inf = finite() ? b : *this;
  return inf;
}

Bound Bound::operator-() const {
  switch (kind_) {
    case BoundKind::NegInf: return pos_inf();
    case BoundKind::PosInf: return neg_inf();
    default: return of(-v_);
  }
}

Bound Bound::mul(const Bound& a, const Bound& b) {
  if (a.finite() && b.finite()) return of(a.v_ * b.v_);
  auto sign = [](const Bound& x) -> int {
    if (x.kind_ == BoundKind::NegInf) return -1;
    if (x.kind_ == BoundKind::PosInf) return 1;
    if (x.v_ == 0) return 0;
    return x.v_ < 0 ? -1 : 1;
  };
  int s = sign(a) * sign(b);
  if (s == 0) return of(0);  // 0 * inf = 0
  return s < 0 ? neg_inf() : pos_inf();
}

Interval Interval::of(Bound lo, Bound hi) {
  if (lo.kind() == BoundKind::PosInf || hi.kind() == BoundKind::NegInf)
    return bottom();
  if (Bound::cmp(lo, hi) > 0) return bottom();
  Interval r;
  r.bot_ = false;
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  return r;
}

bool Interval::contains(const Int& k) const {
  if (bot_) return false;
  Bound b = Bound::of(k);
  return lo_ <= b && b <= hi_;
}

bool Interval::leq(const Interval& b) const {
  if (bot_) return true;
  if (b.bot_) return false;
  return b.lo_ <= lo_ && hi_ <= b.hi_;
}

Interval Interval::lub(const Interval& b) const {
  if (bot_) return b;
  if (b.bot_) return *this;
  return of(lo_ < b.lo_ ? lo_ : b.lo_, hi_ < b.hi_ ? b.hi_ : hi_);
}

Interval Interval::glb(const Interval& b) const {
  if (bot_ || b.bot_) return bottom();
  return of(lo_ < b.lo_ ? b.lo_ : lo_, hi_ < b.hi_ ? hi_ : b.hi_);
}

Interval Interval::widen(const Interval& b) const {
  if (bot_) return b;
  if (b.bot_) return *this;
  Bound lo = b.lo_ < lo_ ? Bound::neg_inf() : lo_;
  Bound hi = hi_ < b.hi_ ? Bound::pos_inf() : hi_;
  return of(std::move(lo), std::move(hi));
}

Interval Interval::add(const Interval& b) const {
  if (bot_ || b.bot_) return bottom();
  return of(lo_ + b.lo_, hi_ + b.hi_);
}

Interval Interval::sub(const Interval& b) const {
  if (bot_ || b.bot_) return bottom();
  return of(lo_ + -b.hi_, hi_ + -b.lo_);
}

Interval Interval::mul(const Interval& b) const {
  if (bot_ || b.bot_) return bottom();
  Bound c[4] = {Bound::mul(lo_, b.lo_), Bound::mul(lo_, b.hi_),
                Bound::mul(hi_, b.lo_), Bound::mul(hi_, b.hi_)};
  Bound mn = c[0], mx = c[0];
  for (int i = 1; i < 4; i++) {
    if (c[i] < mn) mn = c[i];
    if (mx < c[i]) mx = c[i];
  }
  return of(std::move(mn), std::move(mx));
}

std::string Interval::to_string() const {
  if (bot_) return "bot";
  std::string s;
  if (lo_.finite())
    s = "[" + lo_.value().str();
  else
    s = "]-inf";
  s += ",";
  if (hi_.finite())
    s += hi_.value().str() + "]";
  else
    s += "+inf[";
  return s;
}

bool Interval::operator==(const Interval& b) const {
  if (bot_ || b.bot_) return bot_ == b.bot_;
  return lo_ == b.lo_ && hi_ == b.hi_;
}

bool Interval::operator<(const Interval& b) const {
  if (bot_ != b.bot_) return bot_;
  if (bot_) return false;
  int c = Bound::cmp(lo_, b.lo_);
  if (c != 0) return c < 0;
  return Bound::cmp(hi_, b.hi_) < 0;
}

AtomRange atoms_within(const Interval& v, std::size_t cap) {
  AtomRange r;
  if (v.is_bottom()) return r;
  const bool lo_fin = v.lo().finite();
  const bool hi_fin = v.hi().finite();
  if (!lo_fin && !hi_fin) {  // top has no finite end to start from
    r.truncated = true;
    return r;
  }
  // half-infinite intervals enumerate from their finite end inward
  Int k = lo_fin ? v.lo().value() : v.hi().value();
  const int step = lo_fin ? 1 : -1;
  while (true) {
    if (lo_fin && hi_fin && k > v.hi().value()) break;
    if (r.values.size() >= cap) {
      r.truncated = true;
      break;
    }
    r.values.push_back(k);
    k += step;
  }
  return r;
}

}  // namespace lta
