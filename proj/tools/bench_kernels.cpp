// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Wall-clock comparison of the parallel kernels against their serial
// reference: critical pair discovery and language enumeration.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "lta/completion.hpp"
#include "lta/oracle.hpp"
#include "lta/parallel.hpp"

using namespace lta;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

Lta pair_workload(int width) {
  Lta a;
  a.name = "bench";
  a.syms.passive = {{"f", 1}, {"cons", 2}, {"nil", 0}};
  a.syms.builtins = {{"+", 2}};
  a.add_ground("nil", {}, "q0");
  a.add_final("q0");
  for (int i = 0; i < width; ++i) {
    State q = "q" + std::to_string(i + 1);
    a.add_lambda(Interval::closed(i - 3, i + 3), q);
    a.add_ground("f", {q}, "q" + std::to_string((i + 1) % width + 1));
    a.add_ground("cons", {q, "q0"}, "q0");
  }
  return a;
}

Trs pair_rules(int width) {
  Trs r;
  r.name = "bench";
  Term x = Term::var("x");
  for (int k = 0; k < 6; ++k) {
    RewriteRule rule;
    rule.lhs = Term::app("f", {x});
    rule.rhs = Term::app("cons", {x, Term::app("f", {Term::op("+", {x, Term::intconst(k + 1)})})});
    rule.conditions = {Predicate{Relation::Lt, x, Term::intconst(width / 2)},
                       Predicate{Relation::Gt, x, Term::intconst(-k)}};
    r.rules.push_back(rule);
  }
  return r;
}

Lta enum_workload() {
  Lta a;
  a.name = "enumbench";
  a.syms.passive = {{"cons", 2}, {"nil", 0}, {"pair", 2}};
  a.add_ground("nil", {}, "q0");
  a.add_lambda(Interval::closed(-4, 4), "q1");
  a.add_ground("cons", {"q1", "q0"}, "q0");
  a.add_ground("pair", {"q1", "q1"}, "q1");
  a.add_final("q0");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  int width = argc > 1 ? std::atoi(argv[1]) : 60;
  std::cout << "threads: " << get_max_threads()
            << (openmp_enabled() ? "" : " (OpenMP disabled)") << "\n";

  {
    Lta a = pair_workload(width);
    Trs r = pair_rules(width);
    auto t0 = std::chrono::steady_clock::now();
    auto serial = critical_pairs_serial(a, r);
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = critical_pairs(a, r);
    double parallel_ms = ms_since(t0);
    std::cout << "critical pairs (" << serial.size() << " found): serial "
              << serial_ms << " ms, parallel " << parallel_ms << " ms, speedup "
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
    if (serial != parallel) {
      std::cerr << "kernel mismatch: critical pairs differ\n";
      return 1;
    }
  }

  {
    Lta a = enum_workload();
    EnumBounds b;
    b.max_depth = 4;
    b.atom_lo = -4;
    b.atom_hi = 4;
    b.max_terms = 2000000;
    auto t0 = std::chrono::steady_clock::now();
    auto serial = enumerate_language_serial(a, b);
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = enumerate_language(a, b);
    double parallel_ms = ms_since(t0);
    std::cout << "enumeration (" << serial.terms.size() << " terms): serial "
              << serial_ms << " ms, parallel " << parallel_ms << " ms, speedup "
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
    if (serial.terms != parallel.terms || serial.truncated != parallel.truncated) {
      std::cerr << "kernel mismatch: enumerations differ\n";
      return 1;
    }
  }
  return 0;
}
