#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpterm/symbols.hpp"

namespace lpterm {

// Positions are sequences of 1-based child indices; empty = root.
using Position = std::vector<int>;

// Immutable finite first-order term. Variables are global integer ids.
class Term {
 public:
  Term() = default;

  static Term var(int v);
  static Term app(SymbolId s, std::vector<Term> args = {});

  bool valid() const { return rep_ != nullptr; }
  bool is_var() const { return rep_->var >= 0; }
  int var() const { return rep_->var; }
  SymbolId sym() const { return rep_->sym; }
  const std::vector<Term>& args() const { return rep_->args; }
  size_t hash() const { return rep_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  bool operator<(const Term& other) const;  // structural, for deterministic sets

 private:
  struct Rep {
    int var = -1;
    SymbolId sym = -1;
    std::vector<Term> args;
    size_t hash = 0;
  };
  std::shared_ptr<const Rep> rep_;
};

struct Atom {
  SymbolId pred = -1;
  std::vector<Term> args;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.pred == b.pred && a.args == b.args;
  }
};

// Maps variable ids to their source names; unseen ids print as V<i>.
struct VarNames {
  std::unordered_map<int, std::string> names;
  std::string of(int v) const;
};

const Term& subterm_at(const Term& t, const Position& pos);
Term replace_at(const Term& t, const Position& pos, const Term& s);
bool valid_position(const Term& t, const Position& pos);

// Variables in first-occurrence (preorder) order, deduplicated.
void collect_vars(const Term& t, std::vector<int>& out);
std::vector<int> vars_of(const Term& t);
bool contains_var(const Term& t, int v);

std::string to_string(const Term& t, const SymbolTable& table, const VarNames& vars);
std::string to_string(const Atom& a, const SymbolTable& table, const VarNames& vars);

struct TermHash {
  size_t operator()(const Term& t) const { return t.hash(); }
};

}  // namespace lpterm
