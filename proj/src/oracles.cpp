#include "lpterm/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lpterm/graph.hpp"
#include "lpterm/unify.hpp"

namespace lpterm {

namespace {

struct SldState {
  TermGraph graph;
  std::vector<TermGraph::NodeId> goals;      // atom nodes, leftmost first
  std::vector<TermGraph::NodeId> var_nodes;  // every variable node ever made
};

TermGraph::NodeId import_atom(TermGraph& g, const Atom& a,
                              std::map<int, TermGraph::NodeId>& var_map,
                              std::vector<TermGraph::NodeId>& var_nodes) {
  std::vector<TermGraph::NodeId> children;
  std::function<TermGraph::NodeId(const Term&)> imp = [&](const Term& t) -> TermGraph::NodeId {
    if (t.is_var()) {
      auto it = var_map.find(t.var());
      if (it != var_map.end()) return it->second;
      TermGraph::NodeId n = g.add_var(t.var());
      var_map.emplace(t.var(), n);
      var_nodes.push_back(n);
      return n;
    }
    std::vector<TermGraph::NodeId> ch;
    for (const Term& s : t.args()) ch.push_back(imp(s));
    return g.add_app(t.sym(), std::move(ch));
  };
  for (const Term& t : a.args) children.push_back(imp(t));
  return g.add_app(a.pred, std::move(children));
}

struct SldSearch {
  const Program& program;
  int depth_bound;
  int next_var;
  bool exceeded = false;
  std::vector<SldStep> exceeded_path;
  std::vector<SldStep> path;
  VarNames trace_names;

  explicit SldSearch(const Program& p, int bound)
      : program(p), depth_bound(bound), next_var(p.next_var) {
    trace_names = p.var_names;
  }

  bool dfs(SldState& state, int depth, SldState& out) {
    if (state.goals.empty()) {
      out = state;
      return true;
    }
    if (depth >= depth_bound) {
      if (!exceeded) {
        exceeded = true;
        exceeded_path = path;
        out = state;
      }
      return false;
    }
    TermGraph::NodeId selected = state.goals.front();
    std::string selected_str =
        state.graph.to_string(selected, *program.table, trace_names);
    for (size_t ci = 0; ci < program.clauses.size(); ++ci) {
      const Clause& c = program.clauses[ci];
      if (state.graph.sym(selected) != c.head.pred) continue;
      SldState branch = state;  // clone for backtracking
      std::map<int, TermGraph::NodeId> fresh_map;
      int saved_next = next_var;
      // Rename the clause apart by giving its variables fresh ids.
      std::map<int, int> rename;
      auto renamed = [&](const Atom& a) {
        Atom out_atom;
        out_atom.pred = a.pred;
        std::function<Term(const Term&)> go = [&](const Term& t) -> Term {
          if (t.is_var()) {
            auto it = rename.find(t.var());
            if (it == rename.end()) it = rename.emplace(t.var(), next_var++).first;
            return Term::var(it->second);
          }
          std::vector<Term> args;
          for (const Term& s : t.args()) args.push_back(go(s));
          return Term::app(t.sym(), std::move(args));
        };
        for (const Term& t : a.args) out_atom.args.push_back(go(t));
        return out_atom;
      };
      Atom head = renamed(c.head);
      std::vector<Atom> body;
      for (const Atom& b : c.body) body.push_back(renamed(b));

      TermGraph::NodeId head_node =
          import_atom(branch.graph, head, fresh_map, branch.var_nodes);
      if (!branch.graph.unify(selected, head_node)) {
        next_var = saved_next;
        continue;
      }
      std::vector<TermGraph::NodeId> new_goals;
      for (const Atom& b : body)
        new_goals.push_back(import_atom(branch.graph, b, fresh_map, branch.var_nodes));
      new_goals.insert(new_goals.end(), state.goals.begin() + 1, state.goals.end());
      branch.goals = std::move(new_goals);

      path.push_back(SldStep{static_cast<int>(ci), selected_str});
      if (dfs(branch, depth + 1, out)) return true;
      path.pop_back();
    }
    return false;
  }
};

bool ground_term(const Term& t) { return vars_of(t).empty(); }

void add_with_subterms(const Term& t, std::set<Term>& pool) {
  pool.insert(t);
  if (!t.is_var())
    for (const Term& a : t.args()) add_with_subterms(a, pool);
}

}  // namespace

DerivationTrace sld_derive(const Program& p, const std::vector<Atom>& query,
                           int depth_bound) {
  DerivationTrace trace;
  SldState init;
  std::map<int, TermGraph::NodeId> query_vars;
  for (const Atom& a : query)
    init.goals.push_back(import_atom(init.graph, a, query_vars, init.var_nodes));

  SldSearch search(p, depth_bound);
  SldState final_state;
  bool ok = search.dfs(init, 0, final_state);

  const SymbolTable& table = *p.table;
  if (ok) {
    trace.outcome = SldOutcome::Success;
    trace.path = search.path;
    trace.steps = static_cast<int>(search.path.size());
    for (const auto& [v, node] : query_vars)
      trace.answer.emplace_back(p.var_names.of(v),
                                final_state.graph.to_string(node, table, search.trace_names));
    std::set<Term> pool;
    for (TermGraph::NodeId n : final_state.var_nodes) {
      auto t = final_state.graph.to_term(n);
      if (t && ground_term(*t)) add_with_subterms(*t, pool);
    }
    trace.binding_pool.assign(pool.begin(), pool.end());
  } else if (search.exceeded) {
    trace.outcome = SldOutcome::DepthExceeded;
    trace.path = search.exceeded_path;
    trace.steps = static_cast<int>(search.exceeded_path.size());
    for (const auto& [v, node] : query_vars)
      trace.answer.emplace_back(p.var_names.of(v),
                                final_state.graph.to_string(node, table, search.trace_names));
  } else {
    trace.outcome = SldOutcome::Failure;
  }
  return trace;
}

namespace {

bool defined_free(const Term& t, const std::set<SymbolId>& defined) {
  if (t.is_var()) return true;
  if (defined.count(t.sym())) return false;
  for (const Term& a : t.args())
    if (!defined_free(a, defined)) return false;
  return true;
}

void positions_preorder(const Term& t, Position& path, std::vector<Position>& out) {
  out.push_back(path);
  if (t.is_var()) return;
  for (size_t i = 0; i < t.args().size(); ++i) {
    path.push_back(static_cast<int>(i) + 1);
    positions_preorder(t.args()[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Term> rewrite_successors(const Trs& r, const Term& t, const SymbolTable& table,
                                     const std::vector<Term>& pool) {
  (void)table;
  std::set<SymbolId> defined = r.defined();
  std::vector<Term> out;
  std::set<Term> seen;
  std::vector<Position> positions;
  Position path;
  positions_preorder(t, path, positions);

  for (const Position& pos : positions) {
    const Term& sub = subterm_at(t, pos);
    if (sub.is_var()) continue;
    for (const Rule& rule : r.rules) {
      auto m = match(rule.lhs, sub);
      if (!m) continue;
      bool constructor_ok = true;
      for (const auto& [v, bound] : m->bind)
        if (!defined_free(bound, defined)) constructor_ok = false;
      if (!constructor_ok) continue;

      std::vector<int> extra;
      for (int v : vars_of(rule.rhs))
        if (!m->bind.count(v)) extra.push_back(v);

      // Enumerate pool instantiations for the extra variables.
      std::vector<size_t> idx(extra.size(), 0);
      for (;;) {
        Substitution sigma = *m;
        bool full = true;
        for (size_t k = 0; k < extra.size(); ++k) {
          if (pool.empty()) {
            full = false;
            break;
          }
          sigma.bind[extra[k]] = pool[idx[k]];
        }
        if (full || extra.empty()) {
          Term replaced = replace_at(t, pos, sigma.apply(rule.rhs));
          if (seen.insert(replaced).second) out.push_back(replaced);
        }
        if (extra.empty() || pool.empty()) break;
        size_t k = 0;
        for (; k < extra.size(); ++k) {
          if (++idx[k] < pool.size()) break;
          idx[k] = 0;
        }
        if (k == extra.size()) break;
      }
    }
  }
  return out;
}

std::vector<Term> default_instantiation_pool(const Trs& r, const Term& t,
                                             const SymbolTable& table) {
  std::set<SymbolId> defined = r.defined();
  std::set<Term> pool;
  // Ground constructor subterms of the start term.
  std::function<void(const Term&)> walk = [&](const Term& s) {
    if (!s.is_var() && ground_term(s) && defined_free(s, defined)) add_with_subterms(s, pool);
    if (!s.is_var())
      for (const Term& a : s.args()) walk(a);
  };
  walk(t);
  // Constants and depth-2 unary wraps from the signature in use.
  std::set<SymbolId> symbols = trs_symbols(r);
  std::vector<Term> constants;
  for (SymbolId s : symbols)
    if (!defined.count(s) && table[s].arity == 0) constants.push_back(Term::app(s));
  for (const Term& c : constants) pool.insert(c);
  for (SymbolId s : symbols) {
    if (defined.count(s) || table[s].arity != 1) continue;
    for (const Term& c : constants) pool.insert(Term::app(s, {c}));
  }
  std::vector<Term> out(pool.begin(), pool.end());
  if (out.size() > 24) out.resize(24);
  return out;
}

namespace {

struct BoundedSearch {
  const Trs& trs;
  const SymbolTable& table;
  const std::vector<Term>& pool;
  long nodes = 0;
  long node_cap;
  std::set<Term> on_path;

  int longest(const Term& t, int remaining) {
    if (remaining == 0 || ++nodes > node_cap) return 0;
    if (on_path.count(t)) return remaining;  // cycle: pump to the cap
    on_path.insert(t);
    int best = 0;
    for (const Term& s : rewrite_successors(trs, t, table, pool)) {
      best = std::max(best, 1 + longest(s, remaining - 1));
      if (best == remaining) break;
    }
    on_path.erase(t);
    return best;
  }
};

}  // namespace

int rewrite_bounded(const Trs& r, const Term& t, int step_bound, const SymbolTable& table,
                    std::vector<Term> pool) {
  if (pool.empty()) pool = default_instantiation_pool(r, t, table);
  BoundedSearch search{r, table, pool, 0, 200000, {}};
  return search.longest(t, step_bound);
}

int rewrite_reach_length(const Trs& r, const Term& from, const Term& target, int budget,
                         const SymbolTable& table, const std::vector<Term>& pool) {
  std::map<std::pair<Term, int>, int> memo;
  long nodes = 0;
  const long cap = 500000;
  std::function<int(const Term&, int)> go = [&](const Term& t, int remaining) -> int {
    int base = t == target ? 0 : -1;
    if (remaining == 0 || ++nodes > cap) return base;
    auto key = std::make_pair(t, remaining);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = base;
    for (const Term& s : rewrite_successors(r, t, table, pool)) {
      int sub = go(s, remaining - 1);
      if (sub >= 0) best = std::max(best, 1 + sub);
    }
    memo.emplace(key, best);
    return best;
  };
  return go(from, budget);
}

}  // namespace lpterm
