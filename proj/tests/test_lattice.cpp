// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "lta/lattice.hpp"
#include "lta/partition.hpp"

using namespace lta;

namespace {

Interval iv(int lo, int hi) { return Interval::closed(lo, hi); }
Interval from(int lo) { return Interval::of(Bound::of(lo), Bound::pos_inf()); }
Interval upto(int hi) { return Interval::of(Bound::neg_inf(), Bound::of(hi)); }

}  // namespace

TEST_CASE("interval construction and canonical form") {
  CHECK(Interval::of(Bound::of(5), Bound::of(2)).is_bottom());
  CHECK(Interval::bottom().to_string() == "bot");
  CHECK(iv(1, 2).to_string() == "[1,2]");
  CHECK(upto(5).to_string() == "]-inf,5]");
  CHECK(from(5).to_string() == "[5,+inf[");
  CHECK(Interval::top().to_string() == "]-inf,+inf[");
  CHECK(Interval::atom(3) == iv(3, 3));
  CHECK(iv(3, 3).is_atom());
  CHECK_FALSE(iv(3, 4).is_atom());
  CHECK(iv(0, 4).contains(0));
  CHECK(iv(0, 4).contains(4));
  CHECK_FALSE(iv(0, 4).contains(5));
  CHECK(from(2).contains(1000000));
}

TEST_CASE("lub") {
  CHECK(iv(0, 4).lub(iv(2, 6)) == iv(0, 6));
  CHECK(Interval::bottom().lub(iv(1, 2)) == iv(1, 2));
  CHECK(iv(1, 2).lub(Interval::bottom()) == iv(1, 2));

  // [0,1] lub [5,6] = [0,6], and no smaller interval contains both
  const Interval j = iv(0, 1).lub(iv(5, 6));
  CHECK(j == iv(0, 6));
  for (int a = -2; a <= 8; a++)
    for (int b = a; b <= 8; b++) {
      const Interval c = iv(a, b);
      if (iv(0, 1).leq(c) && iv(5, 6).leq(c)) CHECK(j.leq(c));
    }
}

TEST_CASE("glb") {
  CHECK(iv(0, 4).glb(iv(2, 6)) == iv(2, 4));
  CHECK(iv(0, 1).glb(iv(3, 4)).is_bottom());
  CHECK(iv(-3, 2).glb(iv(1, 6)) == iv(1, 2));
  CHECK(Interval::top().glb(iv(7, 9)) == iv(7, 9));
  CHECK(Interval::bottom().glb(iv(7, 9)).is_bottom());
}

TEST_CASE("widen") {
  SUBCASE("ascending chain stabilizes") {
    Interval w = iv(2, 8);
    w = w.widen(w.lub(iv(5, 14)));
    CHECK(w == from(2));
    Interval w2 = w.widen(w.lub(iv(8, 20)));
    CHECK(w2 == w);
  }
  CHECK(iv(1, 2).widen(iv(1, 2)) == iv(1, 2));
  CHECK(iv(0, 5).widen(iv(-1, 5)) == upto(5));
  CHECK(Interval::bottom().widen(iv(1, 2)) == iv(1, 2));
}

TEST_CASE("alpha") {
  CHECK(alpha(1) == iv(1, 1));
  CHECK(alpha(0) == iv(0, 0));
  CHECK(alpha(-7) == iv(-7, -7));
}

TEST_CASE("atoms_within") {
  SUBCASE("finite complete") {
    const AtomRange r = atoms_within(iv(0, 4), 100);
    REQUIRE(r.values.size() == 5);
    for (int k = 0; k <= 4; k++) CHECK(r.values[k] == k);
    CHECK_FALSE(r.truncated);
  }
  SUBCASE("bottom") {
    const AtomRange r = atoms_within(Interval::bottom(), 10);
    CHECK(r.values.empty());
    CHECK_FALSE(r.truncated);
  }
  SUBCASE("infinite truncates from the finite end") {
    const AtomRange r = atoms_within(from(5), 3);
    REQUIRE(r.values.size() == 3);
    CHECK(r.values[0] == 5);
    CHECK(r.values[1] == 6);
    CHECK(r.values[2] == 7);
    CHECK(r.truncated);
  }
  SUBCASE("cap smaller than width truncates") {
    const AtomRange r = atoms_within(iv(0, 9), 4);
    CHECK(r.values.size() == 4);
    CHECK(r.truncated);
  }
}

TEST_CASE("partition check") {
  CHECK_FALSE(Partition::check({upto(-1), iv(0, 0), from(1)}).has_value());
  // [0,5],[3,9]: ill-formed (overlap, and the ends stay uncovered)
  CHECK(Partition::check({iv(0, 5), iv(3, 9)}).has_value());
  const auto overlap = Partition::check({upto(5), from(3)});
  REQUIRE(overlap.has_value());
  CHECK(overlap->find("overlap") != std::string::npos);
  const auto gap = Partition::check({from(0)});
  REQUIRE(gap.has_value());
  CHECK(gap->find("-inf") != std::string::npos);
  const auto hole = Partition::check({upto(0), from(2)});
  REQUIRE(hole.has_value());
  CHECK(hole->find("gap") != std::string::npos);
  CHECK_THROWS_AS(Partition({iv(0, 5), iv(3, 9)}), std::invalid_argument);
}

TEST_CASE("block_of") {
  const Partition pi({upto(-1), iv(0, 0), from(1)});
  SUBCASE("straddling value splits into per-block meets") {
    const auto s = pi.split(iv(-3, 2));
    REQUIRE(s.size() == 3);
    CHECK(s[0].first == 0);
    CHECK(s[0].second == iv(-3, -1));
    CHECK(s[1].first == 1);
    CHECK(s[1].second == iv(0, 0));
    CHECK(s[2].first == 2);
    CHECK(s[2].second == iv(1, 2));
    Interval back = Interval::bottom();
    for (const auto& [i, m] : s) back = back.lub(m);
    CHECK(back == iv(-3, 2));
  }
  CHECK(pi.split(Interval::bottom()).empty());
  const auto t = Partition::trivial().split(iv(3, 4));
  REQUIRE(t.size() == 1);
  CHECK(t[0].second == iv(3, 4));
  CHECK(pi.block_index_of(-10) == 0);
  CHECK(pi.block_index_of(0) == 1);
  CHECK(pi.block_index_of(7) == 2);
}

TEST_CASE("partition refinement relation") {
  const Partition coarse({upto(-1), iv(0, 0), from(1)});
  const Partition fine({upto(-2), iv(-1, -1), iv(0, 0), from(1)});
  CHECK(fine.refines(coarse));
  CHECK_FALSE(coarse.refines(fine));
  CHECK(coarse.refines(coarse));
  CHECK(fine.refines(Partition::trivial()));
}

// the lattice laws, exhaustive on the finite Powerset3 instance
TEST_CASE("lattice laws on Powerset3") {
  for (int x = 0; x < 8; x++)
    for (int y = 0; y < 8; y++) {
      const auto a = Powerset3::of(x), b = Powerset3::of(y);
      const auto j = a.lub(b), m = a.glb(b);
      CHECK(a.leq(j));
      CHECK(b.leq(j));
      CHECK(m.leq(a));
      CHECK(m.leq(b));
      for (int z = 0; z < 8; z++) {
        const auto c = Powerset3::of(z);
        if (a.leq(c) && b.leq(c)) CHECK(j.leq(c));
        if (c.leq(a) && c.leq(b)) CHECK(c.leq(m));
      }
    }
}

TEST_CASE("lattice laws on sampled intervals") {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<int> d(-50, 50);
  auto any = [&]() {
    if (d(rng) > 45) return Interval::bottom();
    int a = d(rng), b = d(rng);
    if (a > b) std::swap(a, b);
    return iv(a, b);
  };
  for (int i = 0; i < 2000; i++) {
    const Interval a = any(), b = any();
    const Interval j = a.lub(b), m = a.glb(b);
    CHECK(a.leq(j));
    CHECK(b.leq(j));
    CHECK(m.leq(a));
    CHECK(m.leq(b));
    CHECK(j.leq(a.widen(b).lub(a)));  // widen(a,b) covers lub when b extends a
    CHECK(a.lub(b).leq(a.widen(a.lub(b))));
  }
}

TEST_CASE("widening chains stabilize fast") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int run = 0; run < 50; run++) {
    // random ascending chain of length 1000
    int lo = d(rng), hi = lo + std::abs(d(rng)) % 10;
    std::vector<Interval> chain{iv(lo, hi)};
    for (int i = 1; i < 1000; i++) {
      if (rng() % 2) lo -= static_cast<int>(rng() % 4);
      if (rng() % 2) hi += static_cast<int>(rng() % 4);
      chain.push_back(iv(lo, hi));
    }
    Interval w = chain[0];
    int changes = 0;
    for (const auto& next : chain) {
      const Interval w2 = w.widen(w.lub(next));
      if (w2 != w) changes++;
      w = w2;
    }
    CHECK(changes <= 3);
    CHECK(chain.back().leq(w));
  }
}

TEST_CASE("abstract arithmetic endpoints") {
  CHECK(iv(0, 4).add(iv(2, 6)) == iv(2, 10));
  CHECK(iv(0, 4).sub(iv(2, 6)) == iv(-6, 2));
  CHECK(iv(3, 6).add(iv(2, 8)) == iv(5, 14));
  CHECK(iv(-2, 3).mul(iv(4, 5)) == iv(-10, 15));
  CHECK(from(2).add(iv(1, 1)) == from(3));
  CHECK(iv(0, 0).mul(Interval::top()) == iv(0, 0));
  CHECK(iv(1, 2).add(Interval::bottom()).is_bottom());
}
