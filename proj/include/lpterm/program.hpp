#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpterm/filter.hpp"
#include "lpterm/term.hpp"

namespace lpterm {

struct Clause {
  Atom head;
  std::vector<Atom> body;
};

struct Program {
  std::shared_ptr<SymbolTable> table;
  std::vector<Clause> clauses;
  std::vector<SymbolId> functions;   // Sigma as written in the source
  std::vector<SymbolId> predicates;  // Delta
  std::optional<SymbolId> fresh_constant;  // added when Sigma has no constant
  VarNames var_names;
  int next_var = 0;

  // Sigma including the fresh constant, when one was added.
  std::vector<SymbolId> sigma() const;
};

enum class Mode { In, Out };

struct Moding {
  // Total on Delta: predicates without a directive default to all-input.
  std::map<SymbolId, std::vector<Mode>> modes;

  const std::vector<Mode>& of(SymbolId p, const SymbolTable& table) const;
  std::vector<int> input_positions(SymbolId p, const SymbolTable& table) const;
  std::vector<int> output_positions(SymbolId p, const SymbolTable& table) const;
};

struct QuerySpec {
  std::optional<Moding> moding;
  std::optional<ArgumentFilter> filter;  // partial, over user symbols
  std::optional<SymbolId> entry;
};

struct WellModedResult {
  bool ok = true;
  int clause_index = -1;
  char condition = ' ';  // 'a' or 'b'
  int body_index = -1;   // for condition (b)
  int variable = -1;     // a witness variable
};

WellModedResult check_well_moded(const Program& p, const Moding& m);

// Initial filter over (Sigma, Delta) from the query spec; moding directives
// keep input positions, unmentioned symbols keep full arity.
ArgumentFilter initial_filter(const QuerySpec& spec, const Program& p);

std::string to_string(const Clause& c, const SymbolTable& table, const VarNames& vars);
std::string to_string(const Program& p);

}  // namespace lpterm
