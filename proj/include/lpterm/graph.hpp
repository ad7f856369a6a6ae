#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpterm/filter.hpp"
#include "lpterm/term.hpp"

namespace lpterm {

// Possibly-cyclic term graph with a union-find overlay. Rational unifiers
// (unification without occur check) live here; everything else in the
// prover works on finite Term trees.
class TermGraph {
 public:
  using NodeId = int;

  NodeId add_var(int var);
  NodeId add_app(SymbolId sym, std::vector<NodeId> children);
  // Imports a finite term; equal variable ids map to one shared node.
  NodeId import_term(const Term& t, std::map<int, NodeId>& var_nodes);

  NodeId find(NodeId n) const;
  bool is_var(NodeId n) const;
  int var(NodeId n) const;
  SymbolId sym(NodeId n) const;
  const std::vector<NodeId>& children(NodeId n) const;

  // Unification without occur check; false only on symbol clash.
  bool unify(NodeId a, NodeId b);

  bool acyclic(NodeId root) const;
  // True iff no cycle is reachable from root through pi-kept argument edges.
  bool finite_under(NodeId root, const ArgumentFilter& pi, const SymbolTable& table) const;

  // Fails (nullopt) if the graph below root is cyclic.
  std::optional<Term> to_term(NodeId root) const;
  // Cycles are cut with a back-reference marker.
  std::string to_string(NodeId root, const SymbolTable& table, const VarNames& vars) const;

  int node_count() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    int var = -1;
    SymbolId sym = -1;
    std::vector<NodeId> children;
    NodeId parent = -1;  // union-find; -1 = representative
  };
  std::vector<Node> nodes_;
};

// Rational substitution: bindings into a shared graph.
struct GraphSubstitution {
  TermGraph graph;
  std::map<int, TermGraph::NodeId> bind;  // variable id -> node

  bool bound(int v) const { return bind.count(v) > 0; }
};

// Most general unifier without occur check (rational trees).
std::optional<GraphSubstitution> unify_rational(const Term& s, const Term& t);
std::optional<GraphSubstitution> unify_rational(const Atom& s, const Atom& t);

bool is_finite_under_filter(const TermGraph& g, TermGraph::NodeId root,
                            const ArgumentFilter& pi, const SymbolTable& table);

}  // namespace lpterm
