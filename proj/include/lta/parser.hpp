// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Spec-file grammar (line-oriented, # comments): lattice, symbols, builtins,
// partition, automaton/trs/equations blocks, config block. Plus the
// canonical printers for automata, full spec files, and DOT.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lta/automaton.hpp"
#include "lta/completion.hpp"
#include "lta/partition.hpp"
#include "lta/rewriting.hpp"

namespace lta {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg), line(line_), col(col_) {}
};

struct SpecFile {
  SymbolTable syms;
  std::optional<Partition> partition;
  std::vector<std::pair<std::string, Lta>> automata;
  std::vector<Trs> trss;
  std::vector<EquationSet> eqsets;
  CompletionConfig config;
  // config-block selections for multi-declaration files
  std::string pick_automaton;
  std::string pick_trs;
  std::string pick_equations;

  const Lta* find_automaton(const std::string& name) const;
  const Trs* find_trs(const std::string& name) const;
  const EquationSet* find_equations(const std::string& name) const;
};

SpecFile parse_spec_file(const std::string& path);
SpecFile parse_spec_text(const std::string& text, const std::string& filename);

// ground concrete term, e.g. "cons([1,1], cons(2, nil))"
Term parse_term(const std::string& text, const SymbolTable& syms);

// canonical serialization; parse(print(a)) reproduces a exactly
std::string automaton_block(const Lta& a);
std::string to_spec_file(const Lta& a,
                         const std::optional<Partition>& p = std::nullopt);
std::string to_dot(const Lta& a);

}  // namespace lta
