#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lpterm/trs.hpp"

namespace lpterm {

struct DpProblem {
  Trs pairs;   // D
  Trs rules;   // R
  ArgumentFilter filter;
};

// DP(R) = { l# -> t# | l -> r in R, t subterm of r, root(t) defined }.
// Subterms are enumerated in postorder, duplicates removed.
Trs dependency_pairs(const Trs& r, SymbolTable& table);

// Replaces topmost defined-rooted proper subterms by distinct fresh variables.
Term cap(const Term& t, const std::set<SymbolId>& defined, int& fresh_var);

struct DepGraph {
  std::vector<std::vector<int>> succ;
};

DepGraph estimated_dependency_graph(const DpProblem& d, SymbolTable& table);

// One sub-problem per SCC (singletons only with a self-arc), ordered by
// smallest pair index.
std::vector<DpProblem> dependency_graph_processor(const DpProblem& d, SymbolTable& table);
std::vector<std::vector<int>> graph_sccs(const DepGraph& g);

// Linear polynomial interpretation over the filtered signature.
struct PolyInterp {
  // coeff[s] = [c0, c1..ck] for filtered symbol s of filtered arity k.
  std::map<SymbolId, std::vector<long>> coeff;
};

struct ReductionStep {
  std::vector<int> removed;  // indices into the problem's pair list
  PolyInterp interp;
};

using Deadline = std::chrono::steady_clock::time_point;
Deadline no_deadline();

struct TimeoutReached : std::runtime_error {
  TimeoutReached() : std::runtime_error("timeout") {}
};

// Searches coefficients in {0..max_coeff} such that filtered rules are weakly
// decreasing, filtered pairs weakly decreasing, and at least one pair strictly
// decreasing (absolute positiveness). nullopt = NoOrder.
std::optional<ReductionStep> reduction_pair_processor(const DpProblem& d, int max_coeff,
                                                      SymbolTable& table,
                                                      Deadline deadline = no_deadline());

// Independent re-check of an emitted witness.
bool verify_reduction_step(const DpProblem& d, const ReductionStep& step, SymbolTable& table);

// (pi(D), pi(R), id).
DpProblem argument_filter_processor(const DpProblem& d, SymbolTable& table);

// Identity filter over every symbol occurring in the problem.
ArgumentFilter identity_filter(const Trs& pairs, const Trs& rules, const SymbolTable& table);

}  // namespace lpterm
