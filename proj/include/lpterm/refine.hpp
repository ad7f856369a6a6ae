#pragma once

#include <stdexcept>
#include <utility>

#include "lpterm/program.hpp"
#include "lpterm/trs.hpp"
#include "lpterm/typing.hpp"

namespace lpterm {

enum class HeuristicKind { Im, Om, OmImproved, TypeBased, TypeBasedImproved };

struct Heuristic {
  HeuristicKind kind = HeuristicKind::TypeBasedImproved;
  const PositionTable* positions = nullptr;  // required for the tb variants
};

struct NoChoice : std::runtime_error {
  NoChoice() : std::runtime_error("refinement heuristic undefined at root position") {}
};

// rho(r, pos) = (f, i): the filtered argument erasing position pos in r.
std::pair<SymbolId, int> heuristic_choose(const Heuristic& h, const Term& r,
                                          const Position& pos, const SymbolTable& table);

// im and om may pick tuple/u first arguments, so they must scan DP(R) u R.
bool heuristic_scans_dps(HeuristicKind k);

struct RefinementStep {
  int rule_index;
  Position pos;
  SymbolId chosen;
  int index;
};

struct RefinementResult {
  ArgumentFilter filter;
  Trs trs;
  std::vector<RefinementStep> trace;
};

// Algorithm 1: shrink pi until the variable condition holds.
RefinementResult refine_basic(const ArgumentFilter& pi0, const Heuristic& h, const Trs& r,
                              SymbolTable& table);

// Algorithm 2: refine with labelled mode-splitting copies. pi0 ranges over
// the logic program's (Sigma, Delta).
RefinementResult refine_modesplit(const ArgumentFilter& pi_user, const Heuristic& h,
                                  const Trs& rp, const Program& program);

struct VariableConditionResult {
  bool ok = true;
  Rule witness_rule;
  int witness_var = -1;
  bool in_dependency_pair = false;
};

// V(pi(r)) subset of V(pi(l)) over R and DP(R).
VariableConditionResult check_variable_condition(const Trs& r, const ArgumentFilter& pi,
                                                 SymbolTable& table);
VariableConditionResult check_variable_condition_rules_only(const Trs& r,
                                                            const ArgumentFilter& pi,
                                                            const SymbolTable& table);

}  // namespace lpterm
