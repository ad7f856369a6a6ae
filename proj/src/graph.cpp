#include "lpterm/graph.hpp"

#include <functional>
#include <set>

namespace lpterm {

TermGraph::NodeId TermGraph::add_var(int var) {
  nodes_.push_back(Node{var, -1, {}, -1});
  return static_cast<NodeId>(nodes_.size()) - 1;
}

TermGraph::NodeId TermGraph::add_app(SymbolId sym, std::vector<NodeId> children) {
  nodes_.push_back(Node{-1, sym, std::move(children), -1});
  return static_cast<NodeId>(nodes_.size()) - 1;
}

TermGraph::NodeId TermGraph::import_term(const Term& t, std::map<int, NodeId>& var_nodes) {
  if (t.is_var()) {
    auto it = var_nodes.find(t.var());
    if (it != var_nodes.end()) return it->second;
    NodeId n = add_var(t.var());
    var_nodes.emplace(t.var(), n);
    return n;
  }
  std::vector<NodeId> ch;
  ch.reserve(t.args().size());
  for (const Term& a : t.args()) ch.push_back(import_term(a, var_nodes));
  return add_app(t.sym(), std::move(ch));
}

TermGraph::NodeId TermGraph::find(NodeId n) const {
  while (nodes_[n].parent >= 0) n = nodes_[n].parent;
  return n;
}

bool TermGraph::is_var(NodeId n) const { return nodes_[find(n)].var >= 0; }
int TermGraph::var(NodeId n) const { return nodes_[find(n)].var; }
SymbolId TermGraph::sym(NodeId n) const { return nodes_[find(n)].sym; }
const std::vector<TermGraph::NodeId>& TermGraph::children(NodeId n) const {
  return nodes_[find(n)].children;
}

bool TermGraph::unify(NodeId a, NodeId b) {
  std::vector<std::pair<NodeId, NodeId>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    x = find(x);
    y = find(y);
    if (x == y) continue;
    Node& nx = nodes_[x];
    Node& ny = nodes_[y];
    if (nx.var >= 0) {
      nx.parent = y;
    } else if (ny.var >= 0) {
      ny.parent = x;
    } else {
      if (nx.sym != ny.sym || nx.children.size() != ny.children.size()) return false;
      // Union before descending so cyclic structures terminate.
      ny.parent = x;
      for (size_t i = 0; i < nx.children.size(); ++i)
        work.emplace_back(nx.children[i], ny.children[i]);
    }
  }
  return true;
}

bool TermGraph::acyclic(NodeId root) const {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<NodeId, int> state;
  std::vector<std::pair<NodeId, size_t>> stack{{find(root), 0}};
  state[find(root)] = 1;
  while (!stack.empty()) {
    auto& [n, idx] = stack.back();
    const auto& ch = nodes_[n].children;
    if (nodes_[n].var >= 0 || idx >= ch.size()) {
      state[n] = 2;
      stack.pop_back();
      continue;
    }
    NodeId c = find(ch[idx++]);
    int s = state.count(c) ? state[c] : 0;
    if (s == 1) return false;
    if (s == 0) {
      state[c] = 1;
      stack.emplace_back(c, 0);
    }
  }
  return true;
}

bool TermGraph::finite_under(NodeId root, const ArgumentFilter& pi,
                             const SymbolTable& table) const {
  std::map<NodeId, int> state;
  std::vector<std::pair<NodeId, size_t>> stack{{find(root), 0}};
  state[find(root)] = 1;
  while (!stack.empty()) {
    auto& [n, idx] = stack.back();
    const Node& node = nodes_[n];
    std::vector<NodeId> kept_children;
    if (node.var < 0) {
      const auto& kept = pi.at(node.sym, table);
      for (int i : kept) kept_children.push_back(node.children[i - 1]);
    }
    if (idx >= kept_children.size()) {
      state[n] = 2;
      stack.pop_back();
      continue;
    }
    NodeId c = find(kept_children[idx++]);
    int s = state.count(c) ? state[c] : 0;
    if (s == 1) return false;
    if (s == 0) {
      state[c] = 1;
      stack.emplace_back(c, 0);
    }
  }
  return true;
}

std::optional<Term> TermGraph::to_term(NodeId root) const {
  if (!acyclic(root)) return std::nullopt;
  std::function<Term(NodeId)> build = [&](NodeId n) -> Term {
    n = find(n);
    const Node& node = nodes_[n];
    if (node.var >= 0) return Term::var(node.var);
    std::vector<Term> args;
    args.reserve(node.children.size());
    for (NodeId c : node.children) args.push_back(build(c));
    return Term::app(node.sym, std::move(args));
  };
  return build(root);
}

std::string TermGraph::to_string(NodeId root, const SymbolTable& table,
                                 const VarNames& vars) const {
  std::set<NodeId> on_path;
  std::function<std::string(NodeId)> go = [&](NodeId n) -> std::string {
    n = find(n);
    const Node& node = nodes_[n];
    if (node.var >= 0) return vars.of(node.var);
    if (on_path.count(n)) return "...";  // back-reference into a cycle
    on_path.insert(n);
    std::string s = table.display(node.sym);
    if (!node.children.empty()) {
      s += "(";
      for (size_t i = 0; i < node.children.size(); ++i) {
        if (i) s += ",";
        s += go(node.children[i]);
      }
      s += ")";
    }
    on_path.erase(n);
    return s;
  };
  return go(root);
}

std::optional<GraphSubstitution> unify_rational(const Term& s, const Term& t) {
  GraphSubstitution sub;
  std::map<int, TermGraph::NodeId> var_nodes;
  TermGraph::NodeId a = sub.graph.import_term(s, var_nodes);
  TermGraph::NodeId b = sub.graph.import_term(t, var_nodes);
  if (!sub.graph.unify(a, b)) return std::nullopt;
  sub.bind = std::move(var_nodes);
  return sub;
}

std::optional<GraphSubstitution> unify_rational(const Atom& s, const Atom& t) {
  if (s.pred != t.pred) return std::nullopt;
  GraphSubstitution sub;
  std::map<int, TermGraph::NodeId> var_nodes;
  std::vector<std::pair<TermGraph::NodeId, TermGraph::NodeId>> pairs;
  for (size_t i = 0; i < s.args.size(); ++i) {
    TermGraph::NodeId a = sub.graph.import_term(s.args[i], var_nodes);
    TermGraph::NodeId b = sub.graph.import_term(t.args[i], var_nodes);
    pairs.emplace_back(a, b);
  }
  for (auto [a, b] : pairs)
    if (!sub.graph.unify(a, b)) return std::nullopt;
  sub.bind = std::move(var_nodes);
  return sub;
}

bool is_finite_under_filter(const TermGraph& g, TermGraph::NodeId root,
                            const ArgumentFilter& pi, const SymbolTable& table) {
  return g.finite_under(root, pi, table);
}

}  // namespace lpterm
