// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <sstream>

#include "lta/parser.hpp"

namespace lta {

namespace {

void ground_lhs(std::ostringstream& out, const GroundTr& g) {
  out << g.head;
  if (!g.args.empty()) {
    out << "(";
    for (size_t i = 0; i < g.args.size(); ++i) {
      if (i) out << ", ";
      out << g.args[i];
    }
    out << ")";
  }
}

}  // namespace

std::string automaton_block(const Lta& a) {
  std::ostringstream out;
  out << "automaton " << a.name << " {\n";
  out << "  states";
  for (const auto& q : a.states) out << " " << q;
  out << "\n";
  out << "  final";
  for (const auto& q : a.finals) out << " " << q;
  out << "\n";
  for (const auto& l : a.lambdas())
    out << "  " << l.value.to_string() << " -> " << l.target << "\n";
  for (const auto& g : a.grounds()) {
    out << "  ";
    ground_lhs(out, g);
    out << " -> " << g.target << "\n";
  }
  for (const auto& e : a.epsilons())
    out << "  " << e.from << " -> " << e.to << "\n";
  out << "}\n";
  return out.str();
}

std::string to_spec_file(const Lta& a, const std::optional<Partition>& p) {
  std::ostringstream out;
  out << "lattice interval-int\n";
  out << "symbols {";
  for (const auto& [name, arity] : a.syms.passive)
    out << " " << name << ":" << arity;
  out << " }\n";
  if (!a.syms.builtins.empty()) {
    out << "builtins {";
    for (const auto& [name, arity] : a.syms.builtins)
      out << " " << name << ":" << arity;
    out << " }\n";
  }
  if (p) {
    out << "partition";
    for (const auto& b : p->blocks()) out << " " << b.to_string();
    out << "\n";
  }
  out << "\n" << automaton_block(a);
  return out.str();
}

std::string to_dot(const Lta& a) {
  std::ostringstream out;
  std::string name = a.name.empty() ? "lta" : a.name;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      name = "lta";
      break;
    }
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  for (const auto& q : a.states) {
    out << "  \"" << q << "\" [shape="
        << (a.finals.count(q) ? "doublecircle" : "circle") << "];\n";
  }
  size_t n = 0;
  for (const auto& l : a.lambdas()) {
    std::string id = "lam" + std::to_string(n++);
    out << "  " << id << " [shape=box, label=\"" << l.value.to_string()
        << "\"];\n";
    out << "  " << id << " -> \"" << l.target << "\";\n";
  }
  n = 0;
  for (const auto& g : a.grounds()) {
    if (g.args.size() == 1) {
      out << "  \"" << g.args[0] << "\" -> \"" << g.target << "\" [label=\""
          << g.head << "\"];\n";
      continue;
    }
    // hyperedge through an auxiliary node; covers arity 0 and >= 2
    std::string id = "g" + std::to_string(n++);
    out << "  " << id << " [shape=box, label=\"" << g.head << "\"];\n";
    for (size_t i = 0; i < g.args.size(); ++i)
      out << "  \"" << g.args[i] << "\" -> " << id << " [label=\"" << (i + 1)
          << "\"];\n";
    out << "  " << id << " -> \"" << g.target << "\";\n";
  }
  for (const auto& e : a.epsilons())
    out << "  \"" << e.from << "\" -> \"" << e.to << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace lta
