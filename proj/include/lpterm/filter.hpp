#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpterm/symbols.hpp"
#include "lpterm/term.hpp"

namespace lpterm {

// Argument filter: maps a symbol f/n to the ordered subset of {1..n} it keeps.
// Lookup of an unmapped symbol is an error; tuple symbols fall back to their
// base symbol's entry (the pi(F) = pi(f) mirroring convention).
class ArgumentFilter {
 public:
  void set(SymbolId s, std::vector<int> kept);
  void set_full(SymbolId s, int arity);
  bool has(SymbolId s) const { return kept_.count(s) > 0; }
  const std::vector<int>& at(SymbolId s, const SymbolTable& table) const;
  bool keeps(SymbolId s, int i, const SymbolTable& table) const;
  void remove(SymbolId s, int i, const SymbolTable& table);

  const std::map<SymbolId, std::vector<int>>& entries() const { return kept_; }

  friend bool operator==(const ArgumentFilter& a, const ArgumentFilter& b) {
    return a.kept_ == b.kept_;
  }

 private:
  std::map<SymbolId, std::vector<int>> kept_;
};

// pi applied to a term; filtered symbols are interned with their reduced arity.
Term apply_filter(const Term& t, const ArgumentFilter& pi, SymbolTable& table);
Atom apply_filter(const Atom& a, const ArgumentFilter& pi, SymbolTable& table);

std::string to_string(const ArgumentFilter& pi, const SymbolTable& table);

}  // namespace lpterm
