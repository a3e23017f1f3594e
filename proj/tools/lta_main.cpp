// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Exit codes: 0 success, 1 engine error,
// 2 negative or inconclusive result, 64 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lta/completion.hpp"
#include "lta/oracle.hpp"
#include "lta/parallel.hpp"
#include "lta/parser.hpp"
#include "lta/partitioned.hpp"

namespace {

using namespace lta;

constexpr int kOk = 0;
constexpr int kEngine = 1;
constexpr int kNegative = 2;
constexpr int kUsage = 64;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw EngineError("cannot write file: " + path);
  out << text;
}

const Lta& chosen_automaton(const SpecFile& s, const std::string& exclude = {}) {
  if (!s.pick_automaton.empty()) {
    if (s.pick_automaton == exclude)
      throw EngineError("config picks the --bad automaton as the initial one");
    const Lta* a = s.find_automaton(s.pick_automaton);
    if (!a)
      throw EngineError("config names unknown automaton '" + s.pick_automaton + "'");
    return *a;
  }
  const Lta* only = nullptr;
  for (const auto& [n, a] : s.automata) {
    if (n == exclude) continue;
    if (only)
      throw EngineError(
          "spec declares several automata; pick one with 'automaton NAME' in "
          "the config block");
    only = &a;
  }
  if (!only) throw EngineError("spec declares no automaton");
  return *only;
}

const Trs& chosen_trs(const SpecFile& s) {
  if (!s.pick_trs.empty()) {
    const Trs* r = s.find_trs(s.pick_trs);
    if (!r) throw EngineError("config names unknown trs '" + s.pick_trs + "'");
    return *r;
  }
  if (s.trss.size() == 1) return s.trss.front();
  if (s.trss.empty()) throw EngineError("spec declares no trs");
  throw EngineError(
      "spec declares several trs blocks; pick one with 'trs NAME' in the "
      "config block");
}

EquationSet chosen_equations(const SpecFile& s) {
  if (!s.pick_equations.empty()) {
    const EquationSet* e = s.find_equations(s.pick_equations);
    if (!e)
      throw EngineError("config names unknown equations '" + s.pick_equations + "'");
    return *e;
  }
  if (s.eqsets.size() == 1) return s.eqsets.front();
  if (s.eqsets.empty()) return EquationSet{};
  throw EngineError(
      "spec declares several equation sets; pick one with 'equations NAME' in "
      "the config block");
}

Partition resolved_partition(const SpecFile& s, const std::string& part_path) {
  if (!part_path.empty()) {
    SpecFile ps = parse_spec_file(part_path);
    if (!ps.partition)
      throw EngineError("file has no partition declaration: " + part_path);
    return *ps.partition;
  }
  if (s.partition) return *s.partition;
  return Partition::trivial();
}

struct CompleteArgs {
  std::string spec;
  std::size_t max_steps = 0;
  std::size_t widen_after = 0;
  bool strict_int = false;
  std::string trace_path;
  std::string out_path;
  bool have_max_steps = false;
  bool have_widen_after = false;
};

int cmd_complete(const CompleteArgs& ca) {
  SpecFile s = parse_spec_file(ca.spec);
  CompletionConfig cfg = s.config;
  cfg.equations = chosen_equations(s);
  if (ca.have_max_steps) cfg.max_steps = ca.max_steps;
  if (ca.have_widen_after) cfg.widen_after = ca.widen_after;
  if (ca.strict_int) cfg.strict_int = true;
  CompletionResult res = complete(chosen_automaton(s), chosen_trs(s), cfg);
  std::string trace_text;
  for (const auto& line : res.trace) trace_text += line + "\n";
  std::cout << trace_text;
  if (!ca.trace_path.empty()) write_file(ca.trace_path, trace_text);
  std::string spec_text = to_spec_file(res.automaton, s.partition);
  if (!ca.out_path.empty())
    write_file(ca.out_path, spec_text);
  else
    std::cout << "\n" << spec_text;
  return res.converged ? kOk : kNegative;
}

int cmd_member(const std::string& file, const std::string& term_text) {
  SpecFile s = parse_spec_file(file);
  const Lta& a = chosen_automaton(s);
  Term t = term_abstract(eval_concrete(parse_term(term_text, s.syms)));
  bool ok = a.member(t);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kNegative;
}

int cmd_check(const CompleteArgs& ca, const std::string& bad_name) {
  SpecFile s = parse_spec_file(ca.spec);
  const Lta* bad = s.find_automaton(bad_name);
  if (!bad) throw EngineError("spec has no automaton named '" + bad_name + "'");
  CompletionConfig cfg = s.config;
  cfg.equations = chosen_equations(s);
  if (ca.have_max_steps) cfg.max_steps = ca.max_steps;
  if (ca.have_widen_after) cfg.widen_after = ca.widen_after;
  if (ca.strict_int) cfg.strict_int = true;
  Verdict v =
      check_reachability(chosen_automaton(s, bad_name), *bad, chosen_trs(s), cfg);
  if (v.safe) {
    std::cout << "Safe\n";
    return kOk;
  }
  std::cout << "Unknown\n";
  if (v.witness) std::cout << "witness: " << v.witness->to_string() << "\n";
  return kNegative;
}

int cmd_det(const std::string& file, const std::string& part_path, bool min) {
  SpecFile s = parse_spec_file(file);
  const Lta& a = chosen_automaton(s);
  Partition part = resolved_partition(s, part_path);
  Plta d = determinize(merge_plta(to_plta(eliminate_epsilons(a), part)));
  if (min) d = minimize(d);
  std::cout << to_spec_file(d.base, d.partition);
  return kOk;
}

int cmd_reduce(const std::string& file) {
  SpecFile s = parse_spec_file(file);
  std::cout << to_spec_file(reduce(chosen_automaton(s)), s.partition);
  return kOk;
}

int cmd_binop(const std::string& file_a, const std::string& file_b, bool do_union) {
  SpecFile sa = parse_spec_file(file_a);
  SpecFile sb = parse_spec_file(file_b);
  const Lta& a = chosen_automaton(sa);
  const Lta& b = chosen_automaton(sb);
  Lta r = do_union ? lta_union(a, b) : intersection(a, b);
  std::cout << to_spec_file(r, sa.partition);
  return kOk;
}

int cmd_included(const std::string& file_a, const std::string& file_b,
                 const std::string& part_path) {
  SpecFile sa = parse_spec_file(file_a);
  SpecFile sb = parse_spec_file(file_b);
  Partition part = resolved_partition(sa, part_path);
  InclusionResult r =
      included_in(chosen_automaton(sa), chosen_automaton(sb), part);
  std::cout << (r.included ? "true" : "false") << "\n";
  if (r.approximate) std::cout << "approximate\n";
  return r.included ? kOk : kNegative;
}

int cmd_dot(const std::string& file) {
  SpecFile s = parse_spec_file(file);
  std::cout << to_dot(chosen_automaton(s));
  return kOk;
}

int cmd_bench_peano(long long x, long long y) {
  PeanoBench b = peano_benchmark(Int(x), Int(y));
  std::cout << "peano_value=" << b.peano_value << "\n";
  std::cout << "peano_steps=" << b.peano_steps << "\n";
  std::cout << "builtin_value=" << b.builtin_value << "\n";
  std::cout << "builtin_steps=" << b.builtin_steps << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice tree automata over integer intervals"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 keeps the default)");

  int rc = kOk;
  CompleteArgs ca;
  std::string bad_name, file_a, file_b, part_path, term_text;
  long long px = 0, py = 0;

  auto* complete_cmd = app.add_subcommand("complete", "run completion on a spec");
  complete_cmd->add_option("spec", ca.spec, "spec file")->required();
  auto* o_steps =
      complete_cmd->add_option("--max-steps", ca.max_steps, "completion step budget");
  auto* o_widen = complete_cmd->add_option("--widen-after", ca.widen_after,
                                           "distinct additions before widening");
  complete_cmd->add_flag("--strict-int", ca.strict_int,
                         "tighten strict inequalities over the integers");
  complete_cmd->add_option("--trace", ca.trace_path, "also write the trace to FILE");
  complete_cmd->add_option("--out", ca.out_path,
                           "write the result spec to FILE instead of stdout");
  complete_cmd->callback([&] {
    ca.have_max_steps = o_steps->count() > 0;
    ca.have_widen_after = o_widen->count() > 0;
    if (threads > 0) set_max_threads(threads);
    rc = cmd_complete(ca);
  });

  auto* member_cmd =
      app.add_subcommand("member", "test whether a ground term is accepted");
  member_cmd->add_option("automaton-file", file_a, "spec file with the automaton")
      ->required();
  member_cmd->add_option("term", term_text, "ground term")->required();
  member_cmd->callback([&] { rc = cmd_member(file_a, term_text); });

  auto* check_cmd =
      app.add_subcommand("check", "completion-based reachability check");
  check_cmd->add_option("spec", ca.spec, "spec file")->required();
  check_cmd->add_option("--bad", bad_name, "name of the bad-term automaton")
      ->required();
  auto* c_steps =
      check_cmd->add_option("--max-steps", ca.max_steps, "completion step budget");
  auto* c_widen = check_cmd->add_option("--widen-after", ca.widen_after,
                                        "distinct additions before widening");
  check_cmd->add_flag("--strict-int", ca.strict_int,
                      "tighten strict inequalities over the integers");
  check_cmd->callback([&] {
    ca.have_max_steps = c_steps->count() > 0;
    ca.have_widen_after = c_widen->count() > 0;
    if (threads > 0) set_max_threads(threads);
    rc = cmd_check(ca, bad_name);
  });

  auto* det_cmd = app.add_subcommand("det", "determinize over a partition");
  det_cmd->add_option("automaton-file", file_a, "spec file")->required();
  det_cmd->add_option("--partition", part_path, "spec file with the partition");
  det_cmd->callback([&] { rc = cmd_det(file_a, part_path, false); });

  auto* min_cmd = app.add_subcommand("min", "determinize and minimize");
  min_cmd->add_option("automaton-file", file_a, "spec file")->required();
  min_cmd->add_option("--partition", part_path, "spec file with the partition");
  min_cmd->callback([&] { rc = cmd_det(file_a, part_path, true); });

  auto* reduce_cmd = app.add_subcommand("reduce", "drop inaccessible states");
  reduce_cmd->add_option("automaton-file", file_a, "spec file")->required();
  reduce_cmd->callback([&] { rc = cmd_reduce(file_a); });

  auto* union_cmd = app.add_subcommand("union", "language union");
  union_cmd->add_option("a", file_a, "spec file")->required();
  union_cmd->add_option("b", file_b, "spec file")->required();
  union_cmd->callback([&] { rc = cmd_binop(file_a, file_b, true); });

  auto* inter_cmd = app.add_subcommand("inter", "language intersection");
  inter_cmd->add_option("a", file_a, "spec file")->required();
  inter_cmd->add_option("b", file_b, "spec file")->required();
  inter_cmd->callback([&] { rc = cmd_binop(file_a, file_b, false); });

  auto* incl_cmd = app.add_subcommand("included", "language inclusion test");
  incl_cmd->add_option("a", file_a, "spec file")->required();
  incl_cmd->add_option("b", file_b, "spec file")->required();
  incl_cmd->add_option("--partition", part_path, "spec file with the partition");
  incl_cmd->callback([&] { rc = cmd_included(file_a, file_b, part_path); });

  auto* dot_cmd = app.add_subcommand("dot", "print the automaton as DOT");
  dot_cmd->add_option("automaton-file", file_a, "spec file")->required();
  dot_cmd->callback([&] { rc = cmd_dot(file_a); });

  auto* peano_cmd =
      app.add_subcommand("bench-peano", "rewrite-based addition benchmark");
  peano_cmd->add_option("x", px, "first addend")
      ->required()
      ->check(CLI::NonNegativeNumber);
  peano_cmd->add_option("y", py, "second addend")
      ->required()
      ->check(CLI::NonNegativeNumber);
  peano_cmd->callback([&] { rc = cmd_bench_peano(px, py); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEngine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEngine;
  }
  return rc;
}
