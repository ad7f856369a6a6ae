#include "lpterm/filter.hpp"

#include <algorithm>

namespace lpterm {

void ArgumentFilter::set(SymbolId s, std::vector<int> kept) {
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  kept_[s] = std::move(kept);
}

void ArgumentFilter::set_full(SymbolId s, int arity) {
  std::vector<int> all(arity);
  for (int i = 0; i < arity; ++i) all[i] = i + 1;
  kept_[s] = std::move(all);
}

const std::vector<int>& ArgumentFilter::at(SymbolId s, const SymbolTable& table) const {
  auto it = kept_.find(s);
  if (it != kept_.end()) return it->second;
  const SymbolData& d = table[s];
  if (d.kind == SymbolKind::Tuple && d.base >= 0) {
    auto bit = kept_.find(d.base);
    if (bit != kept_.end()) return bit->second;
  }
  throw UnmappedSymbol("argument filter has no entry for " + table.display(s));
}

bool ArgumentFilter::keeps(SymbolId s, int i, const SymbolTable& table) const {
  const auto& kept = at(s, table);
  return std::binary_search(kept.begin(), kept.end(), i);
}

void ArgumentFilter::remove(SymbolId s, int i, const SymbolTable& table) {
  auto it = kept_.find(s);
  if (it == kept_.end()) {
    // Materialize a tuple fallback entry before shrinking it.
    set(s, at(s, table));
    it = kept_.find(s);
  }
  auto& v = it->second;
  v.erase(std::remove(v.begin(), v.end(), i), v.end());
}

namespace {

SymbolId filtered_symbol(SymbolId s, int new_arity, SymbolTable& table) {
  const SymbolData d = table[s];
  if (d.arity == new_arity) return s;
  if (d.kind == SymbolKind::Tuple && d.base >= 0) {
    const SymbolData b = table[d.base];
    SymbolId fb = table.intern(b.name, new_arity, b.kind, b.label, b.base);
    return table.intern(d.name, new_arity, SymbolKind::Tuple, d.label, fb);
  }
  return table.intern(d.name, new_arity, d.kind, d.label, d.base);
}

}  // namespace

Term apply_filter(const Term& t, const ArgumentFilter& pi, SymbolTable& table) {
  if (t.is_var()) return t;
  const auto& kept = pi.at(t.sym(), table);
  std::vector<Term> args;
  args.reserve(kept.size());
  for (int i : kept) args.push_back(apply_filter(t.args()[i - 1], pi, table));
  return Term::app(filtered_symbol(t.sym(), static_cast<int>(kept.size()), table),
                   std::move(args));
}

Atom apply_filter(const Atom& a, const ArgumentFilter& pi, SymbolTable& table) {
  const auto& kept = pi.at(a.pred, table);
  Atom out;
  out.pred = filtered_symbol(a.pred, static_cast<int>(kept.size()), table);
  for (int i : kept) out.args.push_back(apply_filter(a.args[i - 1], pi, table));
  return out;
}

std::string to_string(const ArgumentFilter& pi, const SymbolTable& table) {
  std::string s;
  for (const auto& [sym, kept] : pi.entries()) {
    if (!s.empty()) s += ", ";
    s += "pi(" + table.display(sym) + ")={";
    for (size_t i = 0; i < kept.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(kept[i]);
    }
    s += "}";
  }
  return s;
}

}  // namespace lpterm
