#include "lpterm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "lpterm/oracles.hpp"
#include "lpterm/parser.hpp"

namespace lpterm {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FileOutcome {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::string proof;
  std::string emitted_trs;
};

FileOutcome analyze(const std::string& text, const Config& config) {
  Program program = parse_program(text);
  QuerySpec spec = parse_query_spec(text, program);
  FileOutcome out;

  if (config.classical) {
    if (!spec.moding)
      throw std::runtime_error("--classical requires a %query moding directive");
    auto result = transform_classical(program, *spec.moding);
    if (std::holds_alternative<NotWellModed>(result)) {
      const auto& w = std::get<NotWellModed>(result).witness;
      std::string cond(1, w.condition);
      throw std::runtime_error("NotWellModed: clause " + std::to_string(w.clause_index + 1) +
                               " violates condition (" + cond + ")");
    }
    const Trs& r_old = std::get<Trs>(result);
    if (config.emit_trs) out.emitted_trs = to_string(r_old, *program.table);
    ProveResult res = prove_classical_trs(r_old, program, config);
    out.verdict = res.verdict;
    out.reason = res.reason;
    out.proof = config.proof_format == "json" ? res.proof_json : res.proof_text;
    return out;
  }

  if (config.emit_trs) {
    Trs rp = transform_new(program);
    out.emitted_trs = to_string(rp, *program.table);
  }
  ProveResult res = prove(program, spec, config);
  out.verdict = res.verdict;
  out.reason = res.reason;
  out.proof = config.proof_format == "json" ? res.proof_json : res.proof_text;
  return out;
}

int run_single(const std::string& path, const Config& config, std::ostream& out,
               std::ostream& err) {
  FileOutcome res;
  try {
    res = analyze(read_file(path), config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!res.emitted_trs.empty()) out << "TRS:\n" << res.emitted_trs;
  out << res.proof;
  return res.verdict == Verdict::Terminating ? 0 : 1;
}

int run_directory(const std::string& path, const Config& config, std::ostream& out,
                  std::ostream& err) {
  std::vector<std::string> files;
  try {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".pl")
        files.push_back(entry.path().string());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end());

  int successes = 0, failures = 0, timeouts = 0, errors = 0;
  for (const std::string& f : files) {
    auto t0 = std::chrono::steady_clock::now();
    std::string cell;
    try {
      FileOutcome res = analyze(read_file(f), config);
      if (res.verdict == Verdict::Terminating) {
        ++successes;
        cell = "TERMINATING";
      } else if (res.reason == "timeout") {
        ++timeouts;
        cell = "TIMEOUT";
      } else {
        ++failures;
        cell = "UNKNOWN";
      }
    } catch (const std::exception& e) {
      ++errors;
      cell = std::string("ERROR (") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    out << fs::path(f).filename().string() << "\t" << cell << "\t" << ms << " ms\n";
  }
  out << "Successes: " << successes << "  Failures: " << failures
      << "  Timeouts: " << timeouts;
  if (errors) out << "  Errors: " << errors;
  out << "\n";
  return 0;
}

}  // namespace

int run(const std::string& path, const Config& config, std::ostream& out, std::ostream& err) {
  if (fs::is_directory(path)) return run_directory(path, config, out, err);
  if (!fs::exists(path)) {
    err << "error: no such file '" << path << "'\n";
    return 2;
  }
  return run_single(path, config, out, err);
}

namespace {

Term random_ground_term(const Program& program, std::mt19937& rng, int depth) {
  const SymbolTable& table = *program.table;
  std::vector<SymbolId> constants, others;
  for (SymbolId f : program.sigma()) {
    if (table[f].arity == 0)
      constants.push_back(f);
    else
      others.push_back(f);
  }
  if (depth <= 0 || others.empty() || rng() % 3 == 0) {
    SymbolId c = constants[rng() % constants.size()];
    return Term::app(c);
  }
  SymbolId f = others[rng() % others.size()];
  std::vector<Term> args;
  for (int i = 0; i < table[f].arity; ++i)
    args.push_back(random_ground_term(program, rng, depth - 1));
  return Term::app(f, std::move(args));
}

}  // namespace

int run_check(const std::string& path, const Config& config, int samples, int depth_bound,
              unsigned seed, std::ostream& out, std::ostream& err) {
  Program program;
  QuerySpec spec;
  ProveResult res;
  try {
    std::string text = read_file(path);
    program = parse_program(text);
    spec = parse_query_spec(text, program);
    res = prove(program, spec, config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << "verdict: " << to_string(res.verdict) << "\n";
  if (res.verdict != Verdict::Terminating) {
    out << "nothing to cross-validate (no termination claim)\n";
    return 0;
  }

  ArgumentFilter pi = initial_filter(spec, program);
  std::vector<SymbolId> entry_preds;
  if (spec.entry)
    entry_preds.push_back(*spec.entry);
  else
    entry_preds = program.predicates;

  std::mt19937 rng(seed);
  int ran = 0, exceeded = 0;
  int fresh_var = 1000000;
  for (int k = 0; k < samples; ++k) {
    SymbolId p = entry_preds[static_cast<size_t>(k) % entry_preds.size()];
    const auto& kept = pi.at(p, *program.table);
    Atom query;
    query.pred = p;
    for (int i = 1; i <= (*program.table)[p].arity; ++i) {
      bool is_kept = std::binary_search(kept.begin(), kept.end(), i);
      if (is_kept || rng() % 2 == 0)
        query.args.push_back(random_ground_term(program, rng, 4));
      else
        query.args.push_back(Term::var(fresh_var++));
    }
    DerivationTrace trace = sld_derive(program, {query}, depth_bound);
    ++ran;
    if (trace.outcome == SldOutcome::DepthExceeded) {
      ++exceeded;
      out << "MISMATCH: query " << to_string(query, *program.table, program.var_names)
          << " exceeded " << depth_bound << " resolution steps\n";
    }
  }
  out << "checked " << ran << " sampled queries, " << exceeded << " exceeded the bound\n";
  return exceeded == 0 ? 0 : 1;
}

}  // namespace lpterm
