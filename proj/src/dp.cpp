#include "lpterm/dp.hpp"

#include <algorithm>
#include <functional>

#include "lpterm/graph.hpp"
#include "lpterm/transform.hpp"

namespace lpterm {

Deadline no_deadline() { return Deadline::max(); }

namespace {

Term sharp(const Term& t, SymbolTable& table) {
  std::vector<Term> args = t.args();
  return Term::app(table.tuple_of(t.sym()), std::move(args));
}

void postorder_subterms(const Term& t, std::vector<const Term*>& out) {
  if (t.is_var()) return;
  for (const Term& a : t.args()) postorder_subterms(a, out);
  out.push_back(&t);
}

int max_var(const Term& t) {
  int m = -1;
  for (int v : vars_of(t)) m = std::max(m, v);
  return m;
}

Term rename_vars(const Term& t, std::map<int, int>& map, int& fresh) {
  if (t.is_var()) {
    auto it = map.find(t.var());
    if (it == map.end()) it = map.emplace(t.var(), fresh++).first;
    return Term::var(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rename_vars(a, map, fresh));
  return Term::app(t.sym(), std::move(args));
}

}  // namespace

Trs dependency_pairs(const Trs& r, SymbolTable& table) {
  std::set<SymbolId> defined = r.defined();
  Trs out;
  out.var_names = r.var_names;
  for (const Rule& rule : r.rules) {
    std::vector<const Term*> subs;
    postorder_subterms(rule.rhs, subs);
    for (const Term* t : subs) {
      if (!defined.count(t->sym())) continue;
      Rule pair{sharp(rule.lhs, table), sharp(*t, table)};
      if (std::find(out.rules.begin(), out.rules.end(), pair) == out.rules.end()) {
        out.rules.push_back(pair);
        out.rule_clause.push_back(-1);
      }
    }
  }
  return out;
}

Term cap(const Term& t, const std::set<SymbolId>& defined, int& fresh_var) {
  std::function<Term(const Term&)> go = [&](const Term& s) -> Term {
    if (s.is_var()) return s;
    if (defined.count(s.sym())) return Term::var(fresh_var++);
    std::vector<Term> args;
    args.reserve(s.args().size());
    for (const Term& a : s.args()) args.push_back(go(a));
    return Term::app(s.sym(), std::move(args));
  };
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(go(a));
  return Term::app(t.sym(), std::move(args));
}

DepGraph estimated_dependency_graph(const DpProblem& d, SymbolTable& table) {
  const auto& pairs = d.pairs.rules;
  std::set<SymbolId> defined = d.rules.defined();
  DepGraph g;
  g.succ.resize(pairs.size());

  int fresh_base = 0;
  for (const Rule& p : pairs)
    fresh_base = std::max({fresh_base, max_var(p.lhs) + 1, max_var(p.rhs) + 1});

  for (size_t a = 0; a < pairs.size(); ++a) {
    int fresh = fresh_base;
    Term capt = cap(pairs[a].rhs, defined, fresh);
    for (size_t b = 0; b < pairs.size(); ++b) {
      int fresh2 = fresh;
      std::map<int, int> ren;
      Term u = rename_vars(pairs[b].lhs, ren, fresh2);
      GraphSubstitution sub;
      std::map<int, TermGraph::NodeId> var_nodes;
      TermGraph::NodeId na = sub.graph.import_term(capt, var_nodes);
      TermGraph::NodeId nb = sub.graph.import_term(u, var_nodes);
      if (!sub.graph.unify(na, nb)) continue;
      if (!sub.graph.finite_under(na, d.filter, table)) continue;
      g.succ[a].push_back(static_cast<int>(b));
    }
  }
  return g;
}

std::vector<std::vector<int>> graph_sccs(const DepGraph& g) {
  // Tarjan; output normalized to ascending smallest-member order.
  int n = static_cast<int>(g.succ.size());
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  std::function<void(int)> strongconnect = [&](int v) {
    index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<size_t>(v)] = true;
    for (int w : g.succ[static_cast<size_t>(v)]) {
      if (index[static_cast<size_t>(w)] < 0) {
        strongconnect(w);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)],
                                               low[static_cast<size_t>(w)]);
      } else if (on_stack[static_cast<size_t>(w)]) {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)],
                                               index[static_cast<size_t>(w)]);
      }
    }
    if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
      std::vector<int> scc;
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<size_t>(w)] = false;
        scc.push_back(w);
        if (w == v) break;
      }
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  };

  for (int v = 0; v < n; ++v)
    if (index[static_cast<size_t>(v)] < 0) strongconnect(v);

  // Keep only real cycles: size > 1, or a self-arc.
  std::vector<std::vector<int>> out;
  for (auto& scc : sccs) {
    if (scc.size() == 1) {
      int v = scc[0];
      const auto& succ = g.succ[static_cast<size_t>(v)];
      if (std::find(succ.begin(), succ.end(), v) == succ.end()) continue;
    }
    out.push_back(std::move(scc));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<DpProblem> dependency_graph_processor(const DpProblem& d, SymbolTable& table) {
  DepGraph g = estimated_dependency_graph(d, table);
  std::vector<DpProblem> out;
  for (const auto& scc : graph_sccs(g)) {
    DpProblem sub;
    sub.rules = d.rules;
    sub.filter = d.filter;
    sub.pairs.var_names = d.pairs.var_names;
    for (int i : scc) {
      sub.pairs.rules.push_back(d.pairs.rules[static_cast<size_t>(i)]);
      sub.pairs.rule_clause.push_back(-1);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

DpProblem argument_filter_processor(const DpProblem& d, SymbolTable& table) {
  DpProblem out;
  out.pairs = apply_filter(d.pairs, d.filter, table);
  out.rules = apply_filter(d.rules, d.filter, table);
  out.filter = identity_filter(out.pairs, out.rules, table);
  return out;
}

ArgumentFilter identity_filter(const Trs& pairs, const Trs& rules, const SymbolTable& table) {
  ArgumentFilter id;
  for (SymbolId s : trs_symbols(pairs)) id.set_full(s, table[s].arity);
  for (SymbolId s : trs_symbols(rules)) id.set_full(s, table[s].arity);
  return id;
}

}  // namespace lpterm
