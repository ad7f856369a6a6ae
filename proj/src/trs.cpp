#include "lpterm/trs.hpp"

namespace lpterm {

std::set<SymbolId> Trs::defined() const {
  std::set<SymbolId> d;
  for (const Rule& r : rules)
    if (!r.lhs.is_var()) d.insert(r.lhs.sym());
  return d;
}

Trs apply_filter(const Trs& r, const ArgumentFilter& pi, SymbolTable& table) {
  Trs out;
  out.var_names = r.var_names;
  out.rule_clause = r.rule_clause;
  out.rules.reserve(r.rules.size());
  for (const Rule& rule : r.rules)
    out.rules.push_back(Rule{apply_filter(rule.lhs, pi, table),
                             apply_filter(rule.rhs, pi, table)});
  return out;
}

std::string to_string(const Rule& r, const SymbolTable& table, const VarNames& vars) {
  return to_string(r.lhs, table, vars) + " -> " + to_string(r.rhs, table, vars);
}

std::string to_string(const Trs& r, const SymbolTable& table) {
  std::string s;
  for (const Rule& rule : r.rules) {
    s += to_string(rule, table, r.var_names);
    s += "\n";
  }
  return s;
}

}  // namespace lpterm
