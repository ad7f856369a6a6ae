#pragma once

#include <string>
#include <vector>

#include "lpterm/program.hpp"
#include "lpterm/trs.hpp"

namespace lpterm {

enum class SldOutcome { Success, Failure, DepthExceeded };

struct SldStep {
  int clause_index;
  std::string selected;  // leftmost atom at the time of resolution
};

struct DerivationTrace {
  SldOutcome outcome = SldOutcome::Failure;
  int steps = 0;                    // resolutions along the reported branch
  std::vector<SldStep> path;        // successful branch, or first exceeded one
  std::vector<std::pair<std::string, std::string>> answer;  // query var -> term
  // Ground constructor terms read off every binding of the successful
  // derivation (resolved against the final state), subterm-closed. This is
  // the instantiation pool for replaying the derivation as rewriting.
  std::vector<Term> binding_pool;
};

// Depth-first SLD resolution, leftmost selection, clause order, full
// backtracking, no occur check (rational bindings permitted).
DerivationTrace sld_derive(const Program& p, const std::vector<Atom>& query,
                           int depth_bound);

// One constructor-rewriting step in all possible ways; rule variables match
// only defined-symbol-free terms, extra right-hand-side variables are
// instantiated from the pool.
std::vector<Term> rewrite_successors(const Trs& r, const Term& t, const SymbolTable& table,
                                     const std::vector<Term>& pool);

// Longest rewrite sequence found from t, capped at step_bound (cycles pump to
// the cap). Search is node-limited.
int rewrite_bounded(const Trs& r, const Term& t, int step_bound, const SymbolTable& table,
                    std::vector<Term> pool = {});

// Longest rewrite sequence from `from` that ends exactly at `target`, up to
// `budget` steps; -1 when none is found.
int rewrite_reach_length(const Trs& r, const Term& from, const Term& target, int budget,
                         const SymbolTable& table, const std::vector<Term>& pool);

// Ground constructor subterms of t plus small terms over the signature.
std::vector<Term> default_instantiation_pool(const Trs& r, const Term& t,
                                             const SymbolTable& table);

}  // namespace lpterm
