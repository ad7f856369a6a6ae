#pragma once

#include <map>
#include <set>
#include <vector>

#include "lpterm/program.hpp"

namespace lpterm {

// Simple type assignment inferred from position similarity: identical
// variables link argument positions, a nested term links its root's result
// position to the enclosing position. Types are the equivalence classes.
struct TypeAssignment {
  // Predicates map to n type ids, functions to n+1 (last = result type).
  std::map<SymbolId, std::vector<int>> types;
  std::vector<SymbolId> functions;  // Sigma, for the constructor fixpoint
};

TypeAssignment infer_types(const Program& p);

std::set<int> reflexive_positions(SymbolId f, const TypeAssignment& tau,
                                  const SymbolTable& table);

std::set<int> unbounded_positions(SymbolId f, const TypeAssignment& tau,
                                  const SymbolTable& table);

// Precomputed reflexive/unbounded sets for every function symbol.
struct PositionTable {
  std::map<SymbolId, std::set<int>> reflexive;
  std::map<SymbolId, std::set<int>> unbounded;
};

PositionTable compute_position_table(const TypeAssignment& tau, const SymbolTable& table);

}  // namespace lpterm
