#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpterm {

using SymbolId = int32_t;

enum class SymbolKind {
  Function,   // f in Sigma (original program functions)
  Predicate,  // p in Delta
  In,         // p_in, possibly labelled
  Out,        // p_out, possibly labelled
  U,          // u-symbols threading body atoms
  Tuple,      // sharped defined symbols
};

struct SymbolData {
  std::string name;  // base name: "append", "f", "u3"
  int arity = 0;
  SymbolKind kind = SymbolKind::Function;
  std::optional<std::vector<int>> label;  // sorted 1-based indices for labelled copies
  SymbolId base = -1;  // Tuple: the defined symbol; labelled In/Out/U: the unlabelled one
};

class SymbolTable {
 public:
  SymbolId intern(const std::string& name, int arity, SymbolKind kind,
                  std::optional<std::vector<int>> label = std::nullopt,
                  SymbolId base = -1);

  const SymbolData& operator[](SymbolId id) const { return syms_.at(id); }
  int size() const { return static_cast<int>(syms_.size()); }

  // Sharp symbol for a defined symbol; minted on first use.
  SymbolId tuple_of(SymbolId f);
  // Labelled variant of an In/Out/U symbol (base must be unlabelled).
  SymbolId labelled(SymbolId base, std::vector<int> label);

  std::optional<SymbolId> lookup(const std::string& name, int arity, SymbolKind kind,
                                 const std::optional<std::vector<int>>& label = std::nullopt) const;

  // Printed form: "append_in^{2,3}", "APPEND_in", "u3", "f".
  std::string display(SymbolId id) const;

 private:
  using Key = std::tuple<std::string, int, int, std::vector<int>>;
  Key key(const std::string& name, int arity, SymbolKind kind,
          const std::optional<std::vector<int>>& label) const;

  std::vector<SymbolData> syms_;
  std::map<Key, SymbolId> index_;
};

struct UnmappedSymbol : std::runtime_error {
  explicit UnmappedSymbol(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lpterm
