#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "lpterm/dp.hpp"
#include "lpterm/transform.hpp"

namespace lpterm {

namespace {

// Monomials over the coefficient unknowns (sorted ids, with repetition).
using Mono = std::vector<int>;
using Expr = std::map<Mono, long>;

void add_scaled(Expr& a, const Expr& b, long scale) {
  for (const auto& [m, c] : b) {
    long& slot = a[m];
    slot += c * scale;
    if (slot == 0) a.erase(m);
  }
}

Expr times_unknown(const Expr& e, int unknown) {
  Expr out;
  for (const auto& [m, c] : e) {
    Mono m2 = m;
    m2.insert(std::lower_bound(m2.begin(), m2.end(), unknown), unknown);
    out[m2] = c;
  }
  return out;
}

// Linear polynomial in term variables whose coefficients are polynomial
// expressions in the unknowns.
struct TPoly {
  std::map<int, Expr> var_coeff;
  Expr constant;
};

struct UnknownRegistry {
  std::map<SymbolId, int> first;  // symbol -> id of its c0
  std::vector<SymbolId> owner;
  std::vector<int> arg_index;  // 0 = constant, else argument position

  int count() const { return static_cast<int>(owner.size()); }

  void add_symbol(SymbolId s, int filtered_arity) {
    if (first.count(s)) return;
    first[s] = count();
    for (int i = 0; i <= filtered_arity; ++i) {
      owner.push_back(s);
      arg_index.push_back(i);
    }
  }
};

TPoly interpret(const Term& t, const UnknownRegistry& reg) {
  TPoly out;
  if (t.is_var()) {
    out.var_coeff[t.var()] = Expr{{Mono{}, 1}};
    return out;
  }
  int base = reg.first.at(t.sym());
  out.constant[Mono{base}] = 1;
  for (size_t i = 0; i < t.args().size(); ++i) {
    int ci = base + 1 + static_cast<int>(i);
    TPoly sub = interpret(t.args()[i], reg);
    add_scaled(out.constant, times_unknown(sub.constant, ci), 1);
    for (const auto& [v, e] : sub.var_coeff)
      add_scaled(out.var_coeff[v], times_unknown(e, ci), 1);
  }
  return out;
}

struct Constraint {
  Expr expr;
  long offset = 0;  // require expr + offset >= 0
};

// lhs - rhs, coefficient-wise; strict subtracts 1 from the constant part.
std::vector<Constraint> decrease_constraints(const Term& lhs, const Term& rhs,
                                             const UnknownRegistry& reg, bool strict) {
  TPoly pl = interpret(lhs, reg);
  TPoly pr = interpret(rhs, reg);
  std::vector<Constraint> out;
  std::set<int> vars;
  for (const auto& [v, e] : pl.var_coeff) vars.insert(v);
  for (const auto& [v, e] : pr.var_coeff) vars.insert(v);
  for (int v : vars) {
    Constraint c;
    if (pl.var_coeff.count(v)) add_scaled(c.expr, pl.var_coeff[v], 1);
    if (pr.var_coeff.count(v)) add_scaled(c.expr, pr.var_coeff[v], -1);
    out.push_back(std::move(c));
  }
  Constraint c0;
  add_scaled(c0.expr, pl.constant, 1);
  add_scaled(c0.expr, pr.constant, -1);
  if (strict) c0.offset = -1;
  out.push_back(std::move(c0));
  return out;
}

class Solver {
 public:
  Solver(int n_unknowns, int max_coeff, std::vector<Constraint> constraints,
         Deadline deadline)
      : max_coeff_(max_coeff),
        constraints_(std::move(constraints)),
        value_(static_cast<size_t>(n_unknowns), -1),
        deadline_(deadline) {
    std::vector<std::pair<long, int>> occ(static_cast<size_t>(n_unknowns));
    for (int u = 0; u < n_unknowns; ++u) occ[static_cast<size_t>(u)] = {0, u};
    for (const Constraint& c : constraints_)
      for (const auto& [m, coef] : c.expr)
        for (int u : m) occ[static_cast<size_t>(u)].first -= 1;  // negative = more first
    std::stable_sort(occ.begin(), occ.end());
    for (auto& [cnt, u] : occ) order_.push_back(u);
  }

  bool solve() { return dfs(0); }
  const std::vector<int>& values() const { return value_; }

 private:
  bool feasible() const {
    for (const Constraint& c : constraints_) {
      long max = c.offset;
      for (const auto& [m, coef] : c.expr) {
        long lo = 1, hi = 1;
        for (int u : m) {
          int v = value_[static_cast<size_t>(u)];
          lo *= v >= 0 ? v : 0;
          hi *= v >= 0 ? v : max_coeff_;
        }
        max += coef * (coef > 0 ? hi : lo);
      }
      if (max < 0) return false;
    }
    return true;
  }

  bool dfs(size_t depth) {
    if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw TimeoutReached();
    if (!feasible()) return false;
    if (depth == order_.size()) return true;
    int u = order_[depth];
    for (int v = 0; v <= max_coeff_; ++v) {
      value_[static_cast<size_t>(u)] = v;
      if (dfs(depth + 1)) return true;
    }
    value_[static_cast<size_t>(u)] = -1;
    return false;
  }

  int max_coeff_;
  std::vector<Constraint> constraints_;
  std::vector<int> value_;
  std::vector<int> order_;
  Deadline deadline_;
  long nodes_ = 0;
};

// Concrete evaluation used by the independent witness checker.
struct CPoly {
  std::map<int, long> var_coeff;
  long constant = 0;
};

CPoly evaluate(const Term& t, const PolyInterp& interp) {
  CPoly out;
  if (t.is_var()) {
    out.var_coeff[t.var()] = 1;
    return out;
  }
  const std::vector<long>& cs = interp.coeff.at(t.sym());
  out.constant = cs.at(0);
  for (size_t i = 0; i < t.args().size(); ++i) {
    long c = cs.at(i + 1);
    CPoly sub = evaluate(t.args()[i], interp);
    out.constant += c * sub.constant;
    for (const auto& [v, k] : sub.var_coeff) out.var_coeff[v] += c * k;
  }
  return out;
}

bool weakly_decreasing(const Term& lhs, const Term& rhs, const PolyInterp& interp,
                       long strict_margin) {
  CPoly pl = evaluate(lhs, interp);
  CPoly pr = evaluate(rhs, interp);
  if (pl.constant - pr.constant < strict_margin) return false;
  std::set<int> vars;
  for (const auto& [v, c] : pl.var_coeff) vars.insert(v);
  for (const auto& [v, c] : pr.var_coeff) vars.insert(v);
  for (int v : vars) {
    long l = pl.var_coeff.count(v) ? pl.var_coeff[v] : 0;
    long r = pr.var_coeff.count(v) ? pr.var_coeff[v] : 0;
    if (l - r < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<ReductionStep> reduction_pair_processor(const DpProblem& d, int max_coeff,
                                                      SymbolTable& table, Deadline deadline) {
  if (d.pairs.rules.empty()) return std::nullopt;

  Trs fpairs = apply_filter(d.pairs, d.filter, table);
  Trs frules = apply_filter(d.rules, d.filter, table);

  UnknownRegistry reg;
  for (SymbolId s : trs_symbols(frules)) reg.add_symbol(s, table[s].arity);
  for (SymbolId s : trs_symbols(fpairs)) reg.add_symbol(s, table[s].arity);

  std::vector<Constraint> weak;
  for (const Rule& r : frules.rules) {
    auto cs = decrease_constraints(r.lhs, r.rhs, reg, false);
    weak.insert(weak.end(), cs.begin(), cs.end());
  }
  for (const Rule& p : fpairs.rules) {
    auto cs = decrease_constraints(p.lhs, p.rhs, reg, false);
    weak.insert(weak.end(), cs.begin(), cs.end());
  }

  // Later pairs stem from deeper right-hand-side subterms (the recursive
  // calls); preferring them as the strict candidate removes the
  // recursion-carrying pair first, as in the worked proofs.
  for (size_t k = fpairs.rules.size(); k-- > 0;) {
    size_t cand = k;
    std::vector<Constraint> constraints = weak;
    auto strict = decrease_constraints(fpairs.rules[cand].lhs, fpairs.rules[cand].rhs, reg, true);
    constraints.insert(constraints.end(), strict.begin(), strict.end());
    Solver solver(reg.count(), max_coeff, std::move(constraints), deadline);
    if (!solver.solve()) continue;

    PolyInterp interp;
    for (const auto& [s, base] : reg.first) {
      std::vector<long> cs;
      for (int i = 0; i <= table[s].arity; ++i)
        cs.push_back(solver.values()[static_cast<size_t>(base + i)]);
      interp.coeff.emplace(s, std::move(cs));
    }
    ReductionStep step;
    step.interp = std::move(interp);
    for (size_t i = 0; i < fpairs.rules.size(); ++i)
      if (weakly_decreasing(fpairs.rules[i].lhs, fpairs.rules[i].rhs, step.interp, 1))
        step.removed.push_back(static_cast<int>(i));
    return step;
  }
  return std::nullopt;
}

bool verify_reduction_step(const DpProblem& d, const ReductionStep& step, SymbolTable& table) {
  if (step.removed.empty()) return false;
  Trs fpairs = apply_filter(d.pairs, d.filter, table);
  Trs frules = apply_filter(d.rules, d.filter, table);
  for (const auto& [s, cs] : step.interp.coeff)
    if (static_cast<int>(cs.size()) != table[s].arity + 1) return false;
  for (const Rule& r : frules.rules)
    if (!weakly_decreasing(r.lhs, r.rhs, step.interp, 0)) return false;
  for (const Rule& p : fpairs.rules)
    if (!weakly_decreasing(p.lhs, p.rhs, step.interp, 0)) return false;
  for (int i : step.removed) {
    if (i < 0 || i >= static_cast<int>(fpairs.rules.size())) return false;
    const Rule& p = fpairs.rules[static_cast<size_t>(i)];
    if (!weakly_decreasing(p.lhs, p.rhs, step.interp, 1)) return false;
  }
  return true;
}

}  // namespace lpterm
