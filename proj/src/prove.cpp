#include "lpterm/prove.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lpterm/typing.hpp"

namespace lpterm {

const char* to_string(Verdict v) {
  return v == Verdict::Terminating ? "TERMINATING" : "UNKNOWN";
}

namespace {

struct SolveContext {
  SymbolTable& table;
  int max_coeff;
  Deadline deadline;
};

bool deadline_hit(const SolveContext& ctx) {
  return std::chrono::steady_clock::now() > ctx.deadline;
}

ProofNode solve(DpProblem problem, SolveContext& ctx, int budget, bool af_used) {
  ProofNode node;
  node.problem = std::move(problem);
  const DpProblem& d = node.problem;

  if (d.pairs.rules.empty()) {
    node.processor = ProcessorKind::Leaf;
    node.finite = true;
    return node;
  }
  if (budget <= 0) {
    node.processor = ProcessorKind::Open;
    node.note = "processor application budget exhausted";
    return node;
  }
  if (deadline_hit(ctx)) throw TimeoutReached();

  // Dependency graph processor.
  DepGraph g = estimated_dependency_graph(d, ctx.table);
  std::vector<std::vector<int>> sccs = graph_sccs(g);
  bool whole = sccs.size() == 1 && sccs[0].size() == d.pairs.rules.size();
  if (!whole) {
    node.processor = ProcessorKind::DependencyGraph;
    node.sccs = sccs;
    node.finite = true;
    for (const auto& scc : sccs) {
      DpProblem sub;
      sub.rules = d.rules;
      sub.filter = d.filter;
      sub.pairs.var_names = d.pairs.var_names;
      for (int i : scc) {
        sub.pairs.rules.push_back(d.pairs.rules[static_cast<size_t>(i)]);
        sub.pairs.rule_clause.push_back(-1);
      }
      node.children.push_back(solve(std::move(sub), ctx, budget - 1, af_used));
      if (!node.children.back().finite) node.finite = false;
    }
    return node;
  }

  // Reduction pair processor.
  auto step = reduction_pair_processor(d, ctx.max_coeff, ctx.table, ctx.deadline);
  if (step && !step->removed.empty()) {
    node.processor = ProcessorKind::ReductionPair;
    node.reduction = *step;
    DpProblem rest;
    rest.rules = d.rules;
    rest.filter = d.filter;
    rest.pairs.var_names = d.pairs.var_names;
    for (size_t i = 0; i < d.pairs.rules.size(); ++i) {
      if (std::find(step->removed.begin(), step->removed.end(), static_cast<int>(i)) !=
          step->removed.end())
        continue;
      rest.pairs.rules.push_back(d.pairs.rules[i]);
      rest.pairs.rule_clause.push_back(-1);
    }
    node.children.push_back(solve(std::move(rest), ctx, budget - 1, af_used));
    node.finite = node.children.back().finite;
    return node;
  }

  // Argument filter processor, once per branch, then retry.
  if (!af_used) {
    node.processor = ProcessorKind::ArgumentFilter;
    node.children.push_back(
        solve(argument_filter_processor(d, ctx.table), ctx, budget - 1, true));
    node.finite = node.children.back().finite;
    return node;
  }

  node.processor = ProcessorKind::Open;
  node.note = "no reduction pair found (NoOrder)";
  return node;
}

std::string interp_to_string(const PolyInterp& interp, const SymbolTable& table) {
  std::string s;
  for (const auto& [sym, cs] : interp.coeff) {
    if (!s.empty()) s += ", ";
    s += "[" + table.display(sym) + "](";
    int arity = static_cast<int>(cs.size()) - 1;
    for (int i = 1; i <= arity; ++i) {
      if (i > 1) s += ",";
      s += "x" + std::to_string(i);
    }
    s += ") = ";
    std::string body;
    for (int i = 1; i <= arity; ++i) {
      if (cs[static_cast<size_t>(i)] == 0) continue;
      if (!body.empty()) body += " + ";
      if (cs[static_cast<size_t>(i)] != 1) body += std::to_string(cs[static_cast<size_t>(i)]) + "*";
      body += "x" + std::to_string(i);
    }
    if (cs[0] != 0 || body.empty()) {
      if (!body.empty()) body += " + ";
      body += std::to_string(cs[0]);
    }
    s += body;
  }
  return s;
}

size_t fnv1a(const std::string& s) {
  size_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string problem_key(const DpProblem& d, const SymbolTable& table) {
  std::string s;
  for (const Rule& p : d.pairs.rules) s += to_string(p, table, d.pairs.var_names) + ";";
  s += "|";
  for (const Rule& r : d.rules.rules) s += to_string(r, table, d.rules.var_names) + ";";
  s += "|" + to_string(d.filter, table);
  return s;
}

void render_text_node(const ProofNode& node, const SymbolTable& table, int& counter,
                      std::ostringstream& out) {
  int id = counter++;
  out << "== DP problem " << id << " ==\n";
  if (node.problem.pairs.rules.empty()) {
    out << "pairs: none\n";
  } else {
    out << "pairs:\n";
    for (size_t i = 0; i < node.problem.pairs.rules.size(); ++i)
      out << "  (" << i + 1 << ") "
          << to_string(node.problem.pairs.rules[i], table, node.problem.pairs.var_names)
          << "\n";
  }
  switch (node.processor) {
    case ProcessorKind::Leaf:
      out << "status: finite (no pairs left)\n";
      break;
    case ProcessorKind::Open:
      out << "status: open (" << node.note << ")\n";
      break;
    case ProcessorKind::DependencyGraph: {
      out << "processor: dependency graph, SCCs:";
      if (node.sccs.empty()) out << " none";
      for (const auto& scc : node.sccs) {
        out << " {";
        for (size_t i = 0; i < scc.size(); ++i)
          out << (i ? "," : "") << scc[i] + 1;
        out << "}";
      }
      out << "\n";
      break;
    }
    case ProcessorKind::ReductionPair: {
      out << "processor: reduction pair, interpretation: "
          << interp_to_string(node.reduction.interp, table) << "\n";
      out << "strictly decreasing:";
      for (int i : node.reduction.removed) out << " (" << i + 1 << ")";
      out << "\n";
      break;
    }
    case ProcessorKind::ArgumentFilter:
      out << "processor: argument filter (filters applied, identity attached)\n";
      break;
  }
  for (const ProofNode& c : node.children) render_text_node(c, table, counter, out);
}

nlohmann::json render_json_node(const ProofNode& node, const SymbolTable& table) {
  nlohmann::json j;
  nlohmann::json pairs = nlohmann::json::array();
  for (const Rule& p : node.problem.pairs.rules)
    pairs.push_back(to_string(p, table, node.problem.pairs.var_names));
  j["pairs"] = pairs;
  j["rules"] = node.problem.rules.rules.size();
  j["filter"] = to_string(node.problem.filter, table);
  j["hash"] = fnv1a(problem_key(node.problem, table));
  j["finite"] = node.finite;
  switch (node.processor) {
    case ProcessorKind::Leaf:
      j["processor"] = "leaf";
      break;
    case ProcessorKind::Open:
      j["processor"] = "open";
      j["reason"] = node.note;
      break;
    case ProcessorKind::DependencyGraph: {
      j["processor"] = "dependency-graph";
      j["sccs"] = node.sccs;
      break;
    }
    case ProcessorKind::ReductionPair: {
      j["processor"] = "reduction-pair";
      j["removed"] = node.reduction.removed;
      nlohmann::json interp;
      for (const auto& [sym, cs] : node.reduction.interp.coeff)
        interp[table.display(sym)] = cs;
      j["interpretation"] = interp;
      break;
    }
    case ProcessorKind::ArgumentFilter:
      j["processor"] = "argument-filter";
      break;
  }
  nlohmann::json children = nlohmann::json::array();
  for (const ProofNode& c : node.children) children.push_back(render_json_node(c, table));
  j["children"] = children;
  return j;
}

void render_proofs(ProveResult& res, const SymbolTable& table) {
  std::ostringstream out;
  out << "verdict: " << to_string(res.verdict);
  if (res.verdict == Verdict::Unknown && !res.reason.empty()) out << " (" << res.reason << ")";
  out << "\n";
  out << "analyzed TRS (" << res.trs.rules.size() << " rules):\n";
  for (const Rule& r : res.trs.rules)
    out << "  " << to_string(r, table, res.trs.var_names) << "\n";
  out << "argument filter: " << to_string(res.filter, table) << "\n";
  if (res.root) {
    int counter = 1;
    render_text_node(*res.root, table, counter, out);
  }
  res.proof_text = out.str();

  nlohmann::json j;
  j["verdict"] = to_string(res.verdict);
  if (res.verdict == Verdict::Unknown) j["reason"] = res.reason;
  nlohmann::json trs = nlohmann::json::array();
  for (const Rule& r : res.trs.rules) trs.push_back(to_string(r, table, res.trs.var_names));
  j["trs"] = trs;
  j["filter"] = to_string(res.filter, table);
  if (res.root) j["proof"] = render_json_node(*res.root, table);
  res.proof_json = j.dump(2) + "\n";
}

}  // namespace

ProveResult prove(const Program& p, const QuerySpec& spec, const Config& config) {
  SymbolTable& table = *p.table;
  ProveResult res;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(config.timeout_seconds));

  Trs rp = transform_new(p);

  TypeAssignment tau;
  PositionTable positions;
  Heuristic h;
  h.kind = config.heuristic;
  if (h.kind == HeuristicKind::TypeBased || h.kind == HeuristicKind::TypeBasedImproved) {
    tau = infer_types(p);
    positions = compute_position_table(tau, table);
    h.positions = &positions;
  }

  try {
    ArgumentFilter pi_user = initial_filter(spec, p);
    RefinementResult ref;
    if (config.mode_splitting) {
      ref = refine_modesplit(pi_user, h, rp, p);
    } else {
      ArgumentFilter pi0 = extend_initial_filter(pi_user, p, rp);
      ref = refine_basic(pi0, h, rp, table);
    }

    // The om heuristic may leave dependency-pair violations after Algorithm 2;
    // a further Algorithm-1 pass over DP u R restores the variable condition.
    if (!check_variable_condition(ref.trs, ref.filter, table).ok) {
      RefinementResult fix = refine_basic(ref.filter, h, ref.trs, table);
      ref.filter = fix.filter;
    }

    res.trs = ref.trs;
    res.filter = ref.filter;

    DpProblem initial;
    initial.pairs = dependency_pairs(ref.trs, table);
    initial.rules = ref.trs;
    initial.filter = ref.filter;

    SolveContext ctx{table, config.max_coeff, deadline};
    res.root = std::make_unique<ProofNode>(solve(std::move(initial), ctx, 50, false));
    res.verdict = res.root->finite ? Verdict::Terminating : Verdict::Unknown;
    if (res.verdict == Verdict::Unknown) res.reason = "no termination proof found";
  } catch (const TimeoutReached&) {
    res.verdict = Verdict::Unknown;
    res.reason = "timeout";
    res.root.reset();
  }

  render_proofs(res, table);
  return res;
}

ProveResult prove_classical_trs(const Trs& r_old, const Program& p, const Config& config) {
  SymbolTable& table = *p.table;
  ProveResult res;
  res.trs = r_old;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(config.timeout_seconds));
  try {
    DpProblem initial;
    initial.pairs = dependency_pairs(r_old, table);
    initial.rules = r_old;
    initial.filter = identity_filter(initial.pairs, initial.rules, table);
    res.filter = initial.filter;
    SolveContext ctx{table, config.max_coeff, deadline};
    res.root = std::make_unique<ProofNode>(solve(std::move(initial), ctx, 50, true));
    res.verdict = res.root->finite ? Verdict::Terminating : Verdict::Unknown;
    if (res.verdict == Verdict::Unknown) res.reason = "no termination proof found";
  } catch (const TimeoutReached&) {
    res.verdict = Verdict::Unknown;
    res.reason = "timeout";
    res.root.reset();
  }
  render_proofs(res, table);
  return res;
}

}  // namespace lpterm
