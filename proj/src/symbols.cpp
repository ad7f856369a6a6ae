#include "lpterm/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace lpterm {

SymbolTable::Key SymbolTable::key(const std::string& name, int arity, SymbolKind kind,
                                  const std::optional<std::vector<int>>& label) const {
  std::vector<int> lab = label ? *label : std::vector<int>{-1};
  return Key{name, arity, static_cast<int>(kind), lab};
}

SymbolId SymbolTable::intern(const std::string& name, int arity, SymbolKind kind,
                             std::optional<std::vector<int>> label, SymbolId base) {
  if (label) std::sort(label->begin(), label->end());
  auto k = key(name, arity, kind, label);
  auto it = index_.find(k);
  if (it != index_.end()) return it->second;
  SymbolId id = static_cast<SymbolId>(syms_.size());
  syms_.push_back(SymbolData{name, arity, kind, label, base});
  index_.emplace(std::move(k), id);
  return id;
}

SymbolId SymbolTable::tuple_of(SymbolId f) {
  const SymbolData d = syms_.at(f);
  return intern(d.name, d.arity, SymbolKind::Tuple, d.label, f);
}

SymbolId SymbolTable::labelled(SymbolId base, std::vector<int> label) {
  const SymbolData d = syms_.at(base);
  std::sort(label.begin(), label.end());
  return intern(d.name, d.arity, d.kind, label, base);
}

std::optional<SymbolId> SymbolTable::lookup(const std::string& name, int arity, SymbolKind kind,
                                            const std::optional<std::vector<int>>& label) const {
  auto it = index_.find(key(name, arity, kind, label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string label_suffix(const std::optional<std::vector<int>>& label) {
  if (!label) return "";
  std::string s = "^{";
  for (size_t i = 0; i < label->size(); ++i) {
    if (i) s += ",";
    s += std::to_string((*label)[i]);
  }
  return s + "}";
}

std::string upper(const std::string& s) {
  std::string r = s;
  for (char& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return r;
}

}  // namespace

std::string SymbolTable::display(SymbolId id) const {
  const SymbolData& d = syms_.at(id);
  switch (d.kind) {
    case SymbolKind::Function:
    case SymbolKind::Predicate:
      return d.name;
    case SymbolKind::In:
      return d.name + "_in" + label_suffix(d.label);
    case SymbolKind::Out:
      return d.name + "_out" + label_suffix(d.label);
    case SymbolKind::U:
      return d.name + label_suffix(d.label);
    case SymbolKind::Tuple: {
      if (d.base >= 0) {
        const SymbolData& b = syms_.at(d.base);
        switch (b.kind) {
          case SymbolKind::In:
            return upper(b.name) + "_in" + label_suffix(b.label);
          case SymbolKind::Out:
            return upper(b.name) + "_out" + label_suffix(b.label);
          default:
            return upper(b.name) + label_suffix(b.label);
        }
      }
      return upper(d.name) + label_suffix(d.label);
    }
  }
  return d.name;
}

}  // namespace lpterm
