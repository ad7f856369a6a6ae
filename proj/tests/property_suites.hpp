#pragma once

// Randomized property suites shared by the doctest wrapper and the
// acceptance binary. Each suite throws std::runtime_error on failure.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "lpterm/dp.hpp"
#include "lpterm/oracles.hpp"
#include "lpterm/refine.hpp"
#include "lpterm/transform.hpp"
#include "lpterm/typing.hpp"
#include "lpterm/unify.hpp"

namespace property {

using namespace lpterm;

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  int pick(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }
  bool coin() { return pick(2) == 0; }
};

struct RandomProgram {
  Program program;
  std::vector<SymbolId> preds;
};

inline Term random_term(Gen& g, Program& p, int depth, int n_vars) {
  const SymbolTable& t = *p.table;
  if (depth <= 0 || g.pick(3) == 0) {
    if (g.coin() && n_vars > 0) return Term::var(g.pick(n_vars));
    std::vector<SymbolId> consts;
    for (SymbolId f : p.functions)
      if (t[f].arity == 0) consts.push_back(f);
    return Term::app(consts[static_cast<size_t>(g.pick(static_cast<int>(consts.size())))]);
  }
  std::vector<SymbolId> fns;
  for (SymbolId f : p.functions)
    if (t[f].arity > 0) fns.push_back(f);
  SymbolId f = fns[static_cast<size_t>(g.pick(static_cast<int>(fns.size())))];
  std::vector<Term> args;
  for (int i = 0; i < t[f].arity; ++i) args.push_back(random_term(g, p, depth - 1, n_vars));
  return Term::app(f, std::move(args));
}

inline RandomProgram random_program(Gen& g) {
  RandomProgram rp;
  Program& p = rp.program;
  p.table = std::make_shared<SymbolTable>();
  SymbolTable& t = *p.table;
  p.functions = {
      t.intern("c0", 0, SymbolKind::Function),
      t.intern("c1", 0, SymbolKind::Function),
      t.intern("h0", 1, SymbolKind::Function),
      t.intern("h1", 2, SymbolKind::Function),
  };
  int n_preds = 1 + g.pick(3);
  for (int i = 0; i < n_preds; ++i)
    rp.preds.push_back(
        t.intern("q" + std::to_string(i), 1 + g.pick(2), SymbolKind::Predicate));
  p.predicates = rp.preds;

  int n_clauses = 1 + g.pick(4);
  int var_base = 0;
  for (int ci = 0; ci < n_clauses; ++ci) {
    int n_vars = 1 + g.pick(3);
    for (int v = 0; v < n_vars; ++v)
      p.var_names.names[var_base + v] = "X" + std::to_string(var_base + v);
    std::function<Term(const Term&)> shift = [&](const Term& s) -> Term {
      if (s.is_var()) return Term::var(s.var() + var_base);
      std::vector<Term> args;
      for (const Term& a : s.args()) args.push_back(shift(a));
      return Term::app(s.sym(), std::move(args));
    };
    Clause c;
    SymbolId head = rp.preds[static_cast<size_t>(g.pick(static_cast<int>(rp.preds.size())))];
    c.head.pred = head;
    for (int i = 0; i < t[head].arity; ++i)
      c.head.args.push_back(shift(random_term(g, p, 2, n_vars)));
    int n_body = g.pick(3);  // 0..2 body atoms
    for (int b = 0; b < n_body; ++b) {
      SymbolId bp = rp.preds[static_cast<size_t>(g.pick(static_cast<int>(rp.preds.size())))];
      Atom atom;
      atom.pred = bp;
      for (int i = 0; i < t[bp].arity; ++i)
        atom.args.push_back(shift(random_term(g, p, 2, n_vars)));
      c.body.push_back(std::move(atom));
    }
    p.clauses.push_back(std::move(c));
    var_base += n_vars;
  }
  p.next_var = var_base;
  return rp;
}

inline ArgumentFilter random_user_filter(Gen& g, const Program& p) {
  const SymbolTable& t = *p.table;
  ArgumentFilter pi;
  auto random_subset = [&](SymbolId s) {
    std::vector<int> kept;
    for (int i = 1; i <= t[s].arity; ++i)
      if (g.coin()) kept.push_back(i);
    pi.set(s, kept);
  };
  for (SymbolId s : p.sigma()) random_subset(s);
  for (SymbolId s : p.predicates) random_subset(s);
  return pi;
}

inline void var_positions(const Term& t, Position& path, std::vector<Position>& out) {
  if (t.is_var()) {
    out.push_back(path);
    return;
  }
  for (size_t i = 0; i < t.args().size(); ++i) {
    path.push_back(static_cast<int>(i) + 1);
    var_positions(t.args()[i], path, out);
    path.pop_back();
  }
}

inline bool prefix_condition_holds(const Term& r, const Position& pos, SymbolId f, int i) {
  for (size_t j = 0; j < pos.size(); ++j) {
    if (pos[j] != i) continue;
    Position prefix(pos.begin(), pos.begin() + static_cast<long>(j));
    const Term& sub = subterm_at(r, prefix);
    if (!sub.is_var() && sub.sym() == f) return true;
  }
  return false;
}

// --- suite 1: heuristic prefix-condition contract ---
inline void suite_heuristic_prefix(int min_cases, unsigned seed = 20240001) {
  Gen g(seed);
  int cases = 0;
  while (cases < min_cases) {
    RandomProgram rp = random_program(g);
    Trs trs = transform_new(rp.program);
    TypeAssignment tau = infer_types(rp.program);
    PositionTable pt = compute_position_table(tau, *rp.program.table);
    const Heuristic hs[] = {
        {HeuristicKind::Im, nullptr},         {HeuristicKind::Om, nullptr},
        {HeuristicKind::OmImproved, nullptr}, {HeuristicKind::TypeBased, &pt},
        {HeuristicKind::TypeBasedImproved, &pt},
    };
    for (const Rule& rule : trs.rules) {
      std::vector<Position> positions;
      Position path;
      var_positions(rule.rhs, path, positions);
      for (const Position& pos : positions) {
        if (pos.empty()) continue;
        for (const Heuristic& h : hs) {
          std::pair<SymbolId, int> choice;
          try {
            choice = heuristic_choose(h, rule.rhs, pos, *rp.program.table);
          } catch (const NoChoice&) {
            continue;
          }
          expect(prefix_condition_holds(rule.rhs, pos, choice.first, choice.second),
                 "heuristic choice violates the prefix condition");
          ++cases;
        }
      }
    }
  }
}

// --- suite 2: refinement outputs satisfy the variable condition ---
inline void suite_refinement_variable_condition(int min_cases, unsigned seed = 20240002) {
  Gen g(seed);
  int cases = 0;
  while (cases < min_cases) {
    RandomProgram rp = random_program(g);
    SymbolTable& t = *rp.program.table;
    Trs rpt = transform_new(rp.program);
    TypeAssignment tau = infer_types(rp.program);
    PositionTable pt = compute_position_table(tau, t);
    ArgumentFilter user = random_user_filter(g, rp.program);

    const Heuristic hs[] = {
        {HeuristicKind::Im, nullptr},
        {HeuristicKind::Om, nullptr},
        {HeuristicKind::OmImproved, nullptr},
        {HeuristicKind::TypeBasedImproved, &pt},
    };
    for (const Heuristic& h : hs) {
      ArgumentFilter pi0 = extend_initial_filter(user, rp.program, rpt);
      RefinementResult basic = refine_basic(pi0, h, rpt, t);
      expect(check_variable_condition(basic.trs, basic.filter, t).ok,
             "refine_basic output violates the variable condition");
      for (const auto& [sym, kept] : pi0.entries()) {
        const auto& refined = basic.filter.at(sym, t);
        expect(std::includes(kept.begin(), kept.end(), refined.begin(), refined.end()),
               "refine_basic is not monotone");
      }
      ++cases;

      RefinementResult split = refine_modesplit(user, h, rpt, rp.program);
      if (h.kind == HeuristicKind::Om) {
        expect(check_variable_condition_rules_only(split.trs, split.filter, t).ok,
               "refine_modesplit rules violate the variable condition");
      } else {
        expect(check_variable_condition(split.trs, split.filter, t).ok,
               "refine_modesplit output violates the variable condition");
      }
      ++cases;
    }
  }
}

// --- suite 3: reduction pair witnesses re-verify ---
inline void suite_reduction_witnesses(int min_attempts, int min_found,
                                      unsigned seed = 20240004) {
  Gen g(seed);
  int attempts = 0, found = 0;
  while (attempts < min_attempts) {
    RandomProgram rp = random_program(g);
    SymbolTable& t = *rp.program.table;
    Trs rpt = transform_new(rp.program);
    TypeAssignment tau = infer_types(rp.program);
    PositionTable pt = compute_position_table(tau, t);
    RefinementResult ref =
        refine_modesplit(random_user_filter(g, rp.program),
                         {HeuristicKind::TypeBasedImproved, &pt}, rpt, rp.program);
    DpProblem d{dependency_pairs(ref.trs, t), ref.trs, ref.filter};
    for (DpProblem& sub : dependency_graph_processor(d, t)) {
      ++attempts;
      auto step = reduction_pair_processor(sub, 1, t);
      if (step) {
        ++found;
        expect(verify_reduction_step(sub, *step, t),
               "reduction pair witness failed re-verification");
      }
      if (attempts >= min_attempts) break;
    }
  }
  expect(found >= min_found, "too few reduction pair witnesses found");
}

// --- suite 4: Lemma-3.2-style simulation of derivations by rewriting ---
inline void suite_lemma_simulation(int min_cases, int min_successes,
                                   unsigned seed = 20240006) {
  Gen g(seed);
  int cases = 0, successes = 0;
  while (cases < min_cases) {
    RandomProgram rp = random_program(g);
    Program& p = rp.program;
    SymbolTable& t = *p.table;
    SymbolId q = rp.preds[static_cast<size_t>(g.pick(static_cast<int>(rp.preds.size())))];
    Atom query;
    query.pred = q;
    for (int i = 0; i < t[q].arity; ++i) query.args.push_back(random_term(g, p, 2, 0));
    ++cases;
    DerivationTrace trace = sld_derive(p, {query}, 20);
    if (trace.outcome != SldOutcome::Success) continue;
    ++successes;
    Trs rpt = transform_new(p);
    SymbolId q_in = *t.lookup(t[q].name, t[q].arity, SymbolKind::In);
    SymbolId q_out = *t.lookup(t[q].name, t[q].arity, SymbolKind::Out);
    Term from = Term::app(q_in, query.args);
    Term target = Term::app(q_out, query.args);
    std::vector<Term> pool = trace.binding_pool;
    if (pool.size() > 16) pool.resize(16);
    int len = rewrite_reach_length(rpt, from, target, 3 * trace.steps + 4, t, pool);
    expect(len >= trace.steps,
           "rewriting cannot replay a successful derivation at full length");
  }
  expect(successes >= min_successes, "too few successful derivations sampled");
}

inline bool alpha_equal(const Term& a, const Term& b, std::map<int, int>& fwd,
                        std::map<int, int>& bwd) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    auto f = fwd.find(a.var());
    auto g = bwd.find(b.var());
    if (f == fwd.end() && g == bwd.end()) {
      fwd[a.var()] = b.var();
      bwd[b.var()] = a.var();
      return true;
    }
    return f != fwd.end() && g != bwd.end() && f->second == b.var() &&
           g->second == a.var();
  }
  if (a.sym() != b.sym()) return false;
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_equal(a.args()[i], b.args()[i], fwd, bwd)) return false;
  return true;
}

// --- suite 5: finite and rational unification agree on acyclic cases ---
inline void suite_unify_agreement(int min_cases, int min_both, unsigned seed = 20240005) {
  Gen g(seed);
  int cases = 0, both = 0;
  while (cases < min_cases) {
    RandomProgram rp = random_program(g);
    Program& p = rp.program;
    Term s = random_term(g, p, 3, 3);
    Term t = random_term(g, p, 3, 3);
    ++cases;
    auto fin = unify_finite(s, t);
    auto rat = unify_rational(s, t);
    if (fin) {
      expect(rat.has_value(), "finite unifier without a rational one");
      ++both;
      for (const auto& [v, node] : rat->bind)
        expect(rat->graph.acyclic(node), "cyclic rational binding on a finite case");
      expect(fin->apply(s) == fin->apply(t), "finite mgu is not a unifier");
      Substitution rat_sub;
      for (const auto& [v, node] : rat->bind) {
        auto term = rat->graph.to_term(node);
        expect(term.has_value(), "acyclic binding failed to materialize");
        if (!(term->is_var() && term->var() == v)) rat_sub.bind.emplace(v, *term);
      }
      expect(rat_sub.apply(s) == rat_sub.apply(t), "rational mgu is not a unifier");
      std::map<int, int> fwd, bwd;
      expect(alpha_equal(fin->apply(s), rat_sub.apply(s), fwd, bwd),
             "finite and rational mgus disagree up to renaming");
    } else if (rat) {
      bool cyclic = false;
      for (const auto& [v, node] : rat->bind)
        if (!rat->graph.acyclic(node)) cyclic = true;
      expect(cyclic, "finite unification failed without an occur-check cycle");
    }
  }
  expect(both >= min_both, "too few jointly unifiable samples");
}

}  // namespace property
