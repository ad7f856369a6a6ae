#include "lpterm/refine.hpp"

#include <algorithm>
#include <set>

#include "lpterm/dp.hpp"
#include "lpterm/transform.hpp"

namespace lpterm {

namespace {

bool is_u_like(const SymbolTable& table, SymbolId s) {
  const SymbolData& d = table[s];
  if (d.kind == SymbolKind::U) return true;
  return d.kind == SymbolKind::Tuple && d.base >= 0 && table[d.base].kind == SymbolKind::U;
}

bool in_sigma(const SymbolTable& table, SymbolId s) {
  return table[s].kind == SymbolKind::Function;
}

}  // namespace

std::pair<SymbolId, int> heuristic_choose(const Heuristic& h, const Term& r,
                                          const Position& pos, const SymbolTable& table) {
  if (pos.empty()) throw NoChoice();
  switch (h.kind) {
    case HeuristicKind::Im: {
      Position prefix(pos.begin(), pos.end() - 1);
      return {subterm_at(r, prefix).sym(), pos.back()};
    }
    case HeuristicKind::Om:
      return {r.sym(), pos.front()};
    case HeuristicKind::OmImproved: {
      const Term* cur = &r;
      size_t k = 0;
      while (pos[k] == 1 && is_u_like(table, cur->sym())) {
        if (k + 1 >= pos.size()) throw NoChoice();
        cur = &cur->args()[0];
        ++k;
      }
      return {cur->sym(), pos[k]};
    }
    case HeuristicKind::TypeBased:
    case HeuristicKind::TypeBasedImproved: {
      const auto& skip = h.kind == HeuristicKind::TypeBased ? h.positions->reflexive
                                                            : h.positions->unbounded;
      for (size_t j = pos.size(); j-- > 0;) {
        Position prefix(pos.begin(), pos.begin() + static_cast<long>(j));
        SymbolId parent = subterm_at(r, prefix).sym();
        int i = pos[j];
        if (!in_sigma(table, parent)) return {parent, i};
        auto it = skip.find(parent);
        if (it == skip.end() || !it->second.count(i)) return {parent, i};
      }
      throw NoChoice();
    }
  }
  throw NoChoice();
}

bool heuristic_scans_dps(HeuristicKind k) {
  return k == HeuristicKind::Im || k == HeuristicKind::Om;
}

namespace {

// Variable occurrences in t whose whole path survives pi, in preorder.
void surviving_var_occurrences(const Term& t, const ArgumentFilter& pi,
                               const SymbolTable& table, Position& path,
                               std::vector<std::pair<Position, int>>& out) {
  if (t.is_var()) {
    out.emplace_back(path, t.var());
    return;
  }
  for (size_t i = 0; i < t.args().size(); ++i) {
    int idx = static_cast<int>(i) + 1;
    if (!pi.keeps(t.sym(), idx, table)) continue;
    path.push_back(idx);
    surviving_var_occurrences(t.args()[i], pi, table, path, out);
    path.pop_back();
  }
}

std::vector<std::pair<Position, int>> surviving_vars(const Term& t, const ArgumentFilter& pi,
                                                     const SymbolTable& table) {
  std::vector<std::pair<Position, int>> out;
  Position path;
  surviving_var_occurrences(t, pi, table, path, out);
  return out;
}

std::set<int> surviving_var_set(const Term& t, const ArgumentFilter& pi,
                                const SymbolTable& table) {
  std::set<int> out;
  for (const auto& [pos, v] : surviving_vars(t, pi, table)) out.insert(v);
  return out;
}

// First violating occurrence of the rule under pi, if any.
std::optional<Position> first_violation(const Rule& rule, const ArgumentFilter& pi,
                                        const SymbolTable& table) {
  std::set<int> lhs_vars = surviving_var_set(rule.lhs, pi, table);
  for (const auto& [pos, v] : surviving_vars(rule.rhs, pi, table))
    if (!lhs_vars.count(v)) return pos;
  return std::nullopt;
}

void mirror_tuple_filters(const Trs& r, ArgumentFilter& pi, SymbolTable& table) {
  for (SymbolId f : r.defined()) pi.set(table.tuple_of(f), pi.at(f, table));
}

void ensure_full_entries(const Trs& r, ArgumentFilter& pi, const SymbolTable& table) {
  for (SymbolId s : trs_symbols(r))
    if (!pi.has(s)) pi.set_full(s, table[s].arity);
}

}  // namespace

RefinementResult refine_basic(const ArgumentFilter& pi0, const Heuristic& h, const Trs& r,
                              SymbolTable& table) {
  RefinementResult res;
  res.filter = pi0;
  res.trs = r;
  ensure_full_entries(r, res.filter, table);

  std::vector<Rule> scan;
  bool with_dps = heuristic_scans_dps(h.kind);
  if (with_dps) {
    Trs dps = dependency_pairs(r, table);
    // Tuple symbols get their own refinable entries.
    for (SymbolId f : r.defined()) {
      SymbolId tf = table.tuple_of(f);
      if (!res.filter.has(tf)) res.filter.set(tf, res.filter.at(f, table));
    }
    scan = dps.rules;
  }
  scan.insert(scan.end(), r.rules.begin(), r.rules.end());

  for (;;) {
    bool changed = false;
    for (size_t ri = 0; ri < scan.size(); ++ri) {
      auto pos = first_violation(scan[ri], res.filter, table);
      if (!pos) continue;
      auto [f, i] = heuristic_choose(h, scan[ri].rhs, *pos, table);
      res.filter.remove(f, i, table);
      res.trace.push_back(RefinementStep{static_cast<int>(ri), *pos, f, i});
      changed = true;
      break;
    }
    if (!changed) break;
  }

  if (!with_dps) mirror_tuple_filters(r, res.filter, table);
  return res;
}

namespace {

SymbolId unlabelled_base(const SymbolTable& table, SymbolId s) {
  return table[s].label ? table[s].base : s;
}

std::vector<int> label_of(const SymbolTable& table, SymbolId s) {
  const SymbolData& d = table[s];
  if (d.label) return *d.label;
  std::vector<int> full(static_cast<size_t>(d.arity));
  for (int i = 0; i < d.arity; ++i) full[static_cast<size_t>(i)] = i + 1;
  return full;
}

Term relabel_root(const Term& t, SymbolId new_sym) {
  std::vector<Term> args = t.args();
  return Term::app(new_sym, std::move(args));
}

}  // namespace

RefinementResult refine_modesplit(const ArgumentFilter& pi_user, const Heuristic& h,
                                  const Trs& rp, const Program& program) {
  SymbolTable& table = *program.table;
  RefinementResult res;
  res.trs = rp;

  // Rule block per predicate: the rules its clauses produced.
  std::map<SymbolId, std::vector<int>> block;
  for (size_t ri = 0; ri < rp.rules.size(); ++ri) {
    int ci = rp.rule_clause[ri];
    if (ci >= 0) block[program.clauses[static_cast<size_t>(ci)].head.pred].push_back(
        static_cast<int>(ri));
  }

  ArgumentFilter& pi = res.filter;
  std::set<std::pair<SymbolId, std::vector<int>>> instantiated;
  Trs& w = res.trs;

  auto add_block_copy = [&](SymbolId pred, const std::vector<int>& label) {
    if (instantiated.count({pred, label})) return;
    instantiated.insert({pred, label});
    auto it = block.find(pred);
    if (it == block.end()) return;
    for (int ri : it->second) {
      const Rule& orig = rp.rules[static_cast<size_t>(ri)];
      SymbolId l_root = table.labelled(unlabelled_base(table, orig.lhs.sym()), label);
      SymbolId r_root = table.labelled(unlabelled_base(table, orig.rhs.sym()), label);
      for (SymbolId s : {l_root, r_root}) {
        if (pi.has(s)) continue;
        if (table[s].kind == SymbolKind::In)
          pi.set(s, label);
        else
          pi.set_full(s, table[s].arity);
      }
      w.rules.push_back(Rule{relabel_root(orig.lhs, l_root), relabel_root(orig.rhs, r_root)});
      w.rule_clause.push_back(rp.rule_clause[static_cast<size_t>(ri)]);
    }
  };

  // Step 2 first so Step-1 copies can fill their own entries as they appear.
  for (SymbolId f : program.sigma()) {
    if (pi_user.has(f))
      pi.set(f, pi_user.at(f, table));
    else
      pi.set_full(f, table[f].arity);
  }
  for (SymbolId s : trs_symbols(rp))
    if (!pi.has(s)) pi.set_full(s, table[s].arity);

  // Step 1: labelled copies for predicates whose user filter drops positions.
  for (SymbolId pred : program.predicates) {
    if (!pi_user.has(pred)) continue;
    const auto& kept = pi_user.at(pred, table);
    if (static_cast<int>(kept.size()) == table[pred].arity) continue;
    add_block_copy(pred, kept);
  }

  // Step 3.
  constexpr int kMaxIterations = 100000;
  for (int iter = 0; ; ++iter) {
    if (iter >= kMaxIterations)
      throw std::runtime_error("mode-splitting refinement did not converge");
    bool changed = false;
    for (size_t ri = 0; ri < w.rules.size(); ++ri) {
      auto pos = first_violation(w.rules[ri], pi, table);
      if (!pos) continue;
      Rule& rule = w.rules[ri];
      auto [f, i] = heuristic_choose(h, rule.rhs, *pos, table);
      res.trace.push_back(RefinementStep{static_cast<int>(ri), *pos, f, i});

      if (table[f].kind == SymbolKind::In) {
        std::vector<int> old_label = label_of(table, f);
        std::vector<int> new_label;
        for (int k : old_label)
          if (k != i) new_label.push_back(k);
        SymbolId base_in = unlabelled_base(table, f);
        SymbolId f_new = table.labelled(base_in, new_label);
        if (!pi.has(f_new)) pi.set(f_new, new_label);
        SymbolId pred = base_predicate(table, f);
        add_block_copy(pred, new_label);

        // The p_in occurrence sits below the rhs root u: find its position
        // as the longest prefix of pos rooted at f followed by step i.
        Position occ;
        bool found = false;
        for (size_t j = pos->size(); j-- > 0;) {
          if ((*pos)[j] != i) continue;
          Position prefix(pos->begin(), pos->begin() + static_cast<long>(j));
          if (subterm_at(rule.rhs, prefix).sym() == f) {
            occ = prefix;
            found = true;
            break;
          }
        }
        if (!found) throw std::runtime_error("labelled occurrence not found");
        Term new_sub = relabel_root(subterm_at(rule.rhs, occ), f_new);
        rule.rhs = replace_at(rule.rhs, occ, new_sub);

        // Relabel the matching p_out in the follower rule's left-hand side.
        SymbolId u_root = rule.rhs.sym();
        SymbolId out_base = table.intern(table[pred].name, table[pred].arity,
                                         SymbolKind::Out, std::nullopt, pred);
        SymbolId out_old =
            table[f].label ? table.labelled(out_base, old_label) : out_base;
        SymbolId out_new = table.labelled(out_base, new_label);
        if (!pi.has(out_new)) pi.set_full(out_new, table[out_new].arity);
        for (Rule& other : w.rules) {
          if (other.lhs.is_var() || other.lhs.sym() != u_root) continue;
          if (other.lhs.args().empty()) continue;
          const Term& first = other.lhs.args()[0];
          if (first.is_var() || first.sym() != out_old) continue;
          std::vector<Term> args = other.lhs.args();
          args[0] = relabel_root(first, out_new);
          other.lhs = Term::app(other.lhs.sym(), std::move(args));
          break;
        }
      } else {
        pi.remove(f, i, table);
      }
      changed = true;
      break;
    }
    if (!changed) break;
  }

  mirror_tuple_filters(w, pi, table);
  return res;
}

namespace {

VariableConditionResult check_rules(const std::vector<Rule>& rules, const ArgumentFilter& pi,
                                    const SymbolTable& table, bool dps) {
  for (const Rule& rule : rules) {
    std::set<int> lhs_vars = surviving_var_set(rule.lhs, pi, table);
    for (const auto& [pos, v] : surviving_vars(rule.rhs, pi, table)) {
      if (!lhs_vars.count(v)) {
        VariableConditionResult res;
        res.ok = false;
        res.witness_rule = rule;
        res.witness_var = v;
        res.in_dependency_pair = dps;
        return res;
      }
    }
  }
  return VariableConditionResult{};
}

}  // namespace

VariableConditionResult check_variable_condition(const Trs& r, const ArgumentFilter& pi,
                                                 SymbolTable& table) {
  VariableConditionResult res = check_rules(r.rules, pi, table, false);
  if (!res.ok) return res;
  Trs dps = dependency_pairs(r, table);
  return check_rules(dps.rules, pi, table, true);
}

VariableConditionResult check_variable_condition_rules_only(const Trs& r,
                                                            const ArgumentFilter& pi,
                                                            const SymbolTable& table) {
  return check_rules(r.rules, pi, table, false);
}

}  // namespace lpterm
