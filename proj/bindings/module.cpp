#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpterm/oracles.hpp"
#include "lpterm/parser.hpp"
#include "lpterm/prove.hpp"

namespace py = pybind11;
using namespace lpterm;

namespace {

Config make_config(const std::string& heuristic, bool mode_splitting, int max_coeff,
                   double timeout, const std::string& proof_format, bool classical) {
  Config c;
  if (heuristic == "im") c.heuristic = HeuristicKind::Im;
  else if (heuristic == "om") c.heuristic = HeuristicKind::Om;
  else if (heuristic == "om2") c.heuristic = HeuristicKind::OmImproved;
  else if (heuristic == "tb") c.heuristic = HeuristicKind::TypeBased;
  else if (heuristic == "tb2") c.heuristic = HeuristicKind::TypeBasedImproved;
  else throw std::invalid_argument("unknown heuristic '" + heuristic + "'");
  c.mode_splitting = mode_splitting;
  if (max_coeff < 1 || max_coeff > 5) throw std::invalid_argument("max_coeff must be 1..5");
  c.max_coeff = max_coeff;
  c.timeout_seconds = timeout;
  c.proof_format = proof_format;
  c.classical = classical;
  return c;
}

std::vector<std::string> trs_lines(const Trs& r, const SymbolTable& table) {
  std::vector<std::string> out;
  for (const Rule& rule : r.rules) out.push_back(to_string(rule, table, r.var_names));
  return out;
}

py::dict py_parse(const std::string& text) {
  Program p = parse_program(text);
  py::dict d;
  d["clauses"] = p.clauses.size();
  py::list preds, funs;
  for (SymbolId q : p.predicates)
    preds.append(p.table->display(q) + "/" + std::to_string((*p.table)[q].arity));
  for (SymbolId f : p.sigma())
    funs.append(p.table->display(f) + "/" + std::to_string((*p.table)[f].arity));
  d["predicates"] = preds;
  d["functions"] = funs;
  return d;
}

std::vector<std::string> py_transform(const std::string& text) {
  Program p = parse_program(text);
  return trs_lines(transform_new(p), *p.table);
}

std::vector<std::string> py_transform_classical(const std::string& text) {
  Program p = parse_program(text);
  QuerySpec spec = parse_query_spec(text, p);
  if (!spec.moding) throw std::invalid_argument("classical transformation needs %query");
  auto res = transform_classical(p, *spec.moding);
  if (std::holds_alternative<NotWellModed>(res)) {
    const auto& w = std::get<NotWellModed>(res).witness;
    throw std::invalid_argument("not well moded: clause " +
                                std::to_string(w.clause_index + 1) + ", condition (" +
                                std::string(1, w.condition) + ")");
  }
  return trs_lines(std::get<Trs>(res), *p.table);
}

py::dict py_prove(const std::string& text, const std::string& heuristic, bool mode_splitting,
                  int max_coeff, double timeout, const std::string& proof_format) {
  Config config =
      make_config(heuristic, mode_splitting, max_coeff, timeout, proof_format, false);
  Program p = parse_program(text);
  QuerySpec spec = parse_query_spec(text, p);
  ProveResult res = prove(p, spec, config);
  py::dict d;
  d["verdict"] = std::string(to_string(res.verdict));
  d["reason"] = res.reason;
  d["proof"] = proof_format == "json" ? res.proof_json : res.proof_text;
  d["trs"] = trs_lines(res.trs, *p.table);
  return d;
}

py::dict py_sld(const std::string& text, const std::string& query_text, int depth_bound) {
  Program p = parse_program(text + "\n" + query_text);
  if (p.clauses.empty()) throw std::invalid_argument("empty query");
  // the query is parsed as one extra clause appended to the program
  Clause q = p.clauses.back();
  p.clauses.pop_back();
  std::vector<Atom> goals{q.head};
  goals.insert(goals.end(), q.body.begin(), q.body.end());
  DerivationTrace trace = sld_derive(p, goals, depth_bound);
  py::dict d;
  switch (trace.outcome) {
    case SldOutcome::Success: d["outcome"] = "success"; break;
    case SldOutcome::Failure: d["outcome"] = "failure"; break;
    case SldOutcome::DepthExceeded: d["outcome"] = "depth-exceeded"; break;
  }
  d["steps"] = trace.steps;
  py::dict answer;
  for (const auto& [var, term] : trace.answer) answer[py::str(var)] = term;
  d["answer"] = answer;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lpterm, m) {
  m.doc() = "termination prover for definite logic programs";

  m.def("parse_program", &py_parse, py::arg("text"),
        "Parse a definite logic program; returns clause and signature counts.");
  m.def("transform_new", &py_transform, py::arg("text"),
        "Moding-free transformation to a TRS; returns 'l -> r' strings.");
  m.def("transform_classical", &py_transform_classical, py::arg("text"),
        "Classical moded transformation; raises on non-well-moded programs.");
  m.def("prove", &py_prove, py::arg("text"), py::arg("heuristic") = "tb2",
        py::arg("mode_splitting") = true, py::arg("max_coeff") = 2,
        py::arg("timeout") = 60.0, py::arg("proof_format") = "text",
        "Run the full termination pipeline on a program with %query/%filter "
        "directives.");
  m.def("sld_derive", &py_sld, py::arg("text"), py::arg("query"),
        py::arg("depth_bound") = 1000,
        "Bounded SLD resolution (no occur check) for cross-validation.");
}
