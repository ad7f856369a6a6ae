#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lpterm/dp.hpp"
#include "lpterm/program.hpp"
#include "lpterm/refine.hpp"
#include "lpterm/transform.hpp"

namespace lpterm {

struct Config {
  HeuristicKind heuristic = HeuristicKind::TypeBasedImproved;
  bool mode_splitting = true;
  int max_coeff = 2;          // 1..5
  double timeout_seconds = 60.0;
  bool classical = false;     // classical transformation + ordinary rewriting
  std::string proof_format = "text";  // text | json
  bool emit_trs = false;
};

enum class ProcessorKind { DependencyGraph, ReductionPair, ArgumentFilter, Leaf, Open };

struct ProofNode {
  DpProblem problem;
  ProcessorKind processor = ProcessorKind::Leaf;
  std::vector<std::vector<int>> sccs;  // DependencyGraph
  ReductionStep reduction;             // ReductionPair
  std::string note;                    // Open reason etc.
  std::vector<ProofNode> children;
  bool finite = false;
};

enum class Verdict { Terminating, Unknown };

struct ProveResult {
  Verdict verdict = Verdict::Unknown;
  std::string reason;  // for Unknown

  Trs trs;                 // the (possibly labelled) TRS analyzed
  ArgumentFilter filter;   // the refined filter
  std::unique_ptr<ProofNode> root;  // null when refinement alone decided

  std::string proof_text;  // deterministic rendering (text format)
  std::string proof_json;
};

// Full pipeline: transform -> refine -> DP framework loop.
ProveResult prove(const Program& p, const QuerySpec& spec, const Config& config);

// Classical pipeline on an already well-moded transformation result.
ProveResult prove_classical_trs(const Trs& r_old, const Program& p, const Config& config);

const char* to_string(Verdict v);

}  // namespace lpterm
