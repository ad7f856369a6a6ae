#pragma once

#include <set>
#include <string>
#include <vector>

#include "lpterm/filter.hpp"
#include "lpterm/term.hpp"

namespace lpterm {

struct Rule {
  Term lhs, rhs;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct Trs {
  std::vector<Rule> rules;
  // Originating clause index per rule (-1 when not applicable); used by the
  // mode-splitting refinement to copy a predicate's rule block.
  std::vector<int> rule_clause;
  VarNames var_names;

  std::set<SymbolId> defined() const;

  friend bool operator==(const Trs& a, const Trs& b) { return a.rules == b.rules; }
};

Trs apply_filter(const Trs& r, const ArgumentFilter& pi, SymbolTable& table);

std::string to_string(const Rule& r, const SymbolTable& table, const VarNames& vars);
std::string to_string(const Trs& r, const SymbolTable& table);

}  // namespace lpterm
