#include "lpterm/typing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lpterm {

namespace {

// Position keys: (symbol, index) with index in 1..arity, and arity+1 for a
// function's result.
struct UnionFind {
  std::vector<int> parent;

  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

struct Inference {
  const SymbolTable& table;
  UnionFind uf;
  std::map<std::pair<SymbolId, int>, int> keys;
  std::map<int, std::vector<int>> var_positions;  // variable -> position nodes

  explicit Inference(const SymbolTable& t) : table(t) {}

  int key(SymbolId s, int i) {
    auto it = keys.find({s, i});
    if (it != keys.end()) return it->second;
    int k = uf.make();
    keys.emplace(std::make_pair(s, i), k);
    return k;
  }

  int result_key(SymbolId f) { return key(f, table[f].arity + 1); }

  void visit_arg(const Term& t, SymbolId parent_sym, int parent_index) {
    int pos = key(parent_sym, parent_index);
    if (t.is_var()) {
      var_positions[t.var()].push_back(pos);
      return;
    }
    uf.merge(result_key(t.sym()), pos);
    for (size_t i = 0; i < t.args().size(); ++i)
      visit_arg(t.args()[i], t.sym(), static_cast<int>(i) + 1);
  }

  void visit_atom(const Atom& a) {
    for (size_t i = 0; i < a.args.size(); ++i)
      visit_arg(a.args[i], a.pred, static_cast<int>(i) + 1);
  }
};

}  // namespace

TypeAssignment infer_types(const Program& p) {
  const SymbolTable& table = *p.table;
  Inference inf(table);

  // Materialize keys for all declared symbols so every position gets a type.
  for (SymbolId q : p.predicates)
    for (int i = 1; i <= table[q].arity; ++i) inf.key(q, i);
  for (SymbolId f : p.sigma())
    for (int i = 1; i <= table[f].arity + 1; ++i) inf.key(f, i);

  for (const Clause& c : p.clauses) {
    inf.var_positions.clear();
    inf.visit_atom(c.head);
    for (const Atom& b : c.body) inf.visit_atom(b);
    for (const auto& [v, positions] : inf.var_positions)
      for (size_t i = 1; i < positions.size(); ++i)
        inf.uf.merge(positions[0], positions[i]);
  }

  // Name classes deterministically by their smallest member node.
  std::map<int, int> canon;
  auto type_of = [&](int node) {
    int r = inf.uf.find(node);
    auto it = canon.find(r);
    if (it != canon.end()) return it->second;
    int id = static_cast<int>(canon.size());
    canon.emplace(r, id);
    return id;
  };

  TypeAssignment tau;
  tau.functions = p.sigma();
  for (SymbolId q : p.predicates) {
    std::vector<int> ts;
    for (int i = 1; i <= table[q].arity; ++i) ts.push_back(type_of(inf.key(q, i)));
    tau.types.emplace(q, std::move(ts));
  }
  for (SymbolId f : p.sigma()) {
    std::vector<int> ts;
    for (int i = 1; i <= table[f].arity + 1; ++i) ts.push_back(type_of(inf.key(f, i)));
    tau.types.emplace(f, std::move(ts));
  }
  return tau;
}

std::set<int> reflexive_positions(SymbolId f, const TypeAssignment& tau,
                                  const SymbolTable& table) {
  std::set<int> out;
  const auto& ts = tau.types.at(f);
  int n = table[f].arity;
  for (int i = 1; i <= n; ++i)
    if (ts[static_cast<size_t>(i) - 1] == ts[static_cast<size_t>(n)]) out.insert(i);
  return out;
}

std::set<int> unbounded_positions(SymbolId f, const TypeAssignment& tau,
                                  const SymbolTable& table) {
  return compute_position_table(tau, table).unbounded.at(f);
}

PositionTable compute_position_table(const TypeAssignment& tau, const SymbolTable& table) {
  PositionTable pt;
  // Constructors per type: functions whose result type is theta.
  std::map<int, std::vector<SymbolId>> constructors;
  for (SymbolId f : tau.functions) {
    const auto& ts = tau.types.at(f);
    constructors[ts.back()].push_back(f);
    pt.reflexive[f] = reflexive_positions(f, tau, table);
    pt.unbounded[f] = pt.reflexive[f];
  }
  // Least fixpoint: i unbounded if its type has a constructor with an
  // unbounded position.
  bool changed = true;
  while (changed) {
    changed = false;
    for (SymbolId f : tau.functions) {
      const auto& ts = tau.types.at(f);
      for (int i = 1; i <= table[f].arity; ++i) {
        if (pt.unbounded[f].count(i)) continue;
        int theta = ts[static_cast<size_t>(i) - 1];
        auto it = constructors.find(theta);
        if (it == constructors.end()) continue;
        for (SymbolId g : it->second) {
          if (!pt.unbounded[g].empty()) {
            pt.unbounded[f].insert(i);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return pt;
}

}  // namespace lpterm
