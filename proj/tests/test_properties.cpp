#include <doctest.h>

#include <algorithm>
#include <functional>

#include "property_suites.hpp"

using namespace lpterm;
using property::Gen;
using property::random_program;
using property::random_user_filter;
using property::RandomProgram;

TEST_CASE("property: heuristics satisfy the prefix condition") {
  CHECK_NOTHROW(property::suite_heuristic_prefix(1200));
}

TEST_CASE("property: refinement outputs satisfy the variable condition") {
  CHECK_NOTHROW(property::suite_refinement_variable_condition(1000));
}

TEST_CASE("property: reduction pair witnesses re-verify") {
  CHECK_NOTHROW(property::suite_reduction_witnesses(1000, 100));
}

TEST_CASE("property: derivations replay as rewrite sequences") {
  CHECK_NOTHROW(property::suite_lemma_simulation(1000, 100));
}

TEST_CASE("property: finite and rational unification agree") {
  CHECK_NOTHROW(property::suite_unify_agreement(1000, 100));
}

TEST_CASE("property: mode-splitting output unlabels back to the input TRS") {
  Gen g(20240003);
  for (int k = 0; k < 300; ++k) {
    RandomProgram rp = random_program(g);
    SymbolTable& t = *rp.program.table;
    Trs rpt = transform_new(rp.program);
    TypeAssignment tau = infer_types(rp.program);
    PositionTable pt = compute_position_table(tau, t);
    RefinementResult split = refine_modesplit(random_user_filter(g, rp.program),
                                              {HeuristicKind::TypeBasedImproved, &pt},
                                              rpt, rp.program);
    std::set<std::string> unlabelled, original;
    std::function<Term(const Term&)> unlab = [&](const Term& term) -> Term {
      if (term.is_var()) return term;
      SymbolId s = term.sym();
      if (t[s].label) s = t[s].base;
      std::vector<Term> args;
      for (const Term& a : term.args()) args.push_back(unlab(a));
      return Term::app(s, std::move(args));
    };
    for (const Rule& rule : split.trs.rules)
      unlabelled.insert(
          to_string(Rule{unlab(rule.lhs), unlab(rule.rhs)}, t, split.trs.var_names));
    for (const Rule& rule : rpt.rules)
      original.insert(to_string(rule, t, rpt.var_names));
    CHECK(unlabelled == original);
  }
}

TEST_CASE("property: dependency pairs commute with u-preserving filters") {
  Gen g(20240007);
  for (int k = 0; k < 200; ++k) {
    RandomProgram rp = random_program(g);
    SymbolTable& t = *rp.program.table;
    Trs rpt = transform_new(rp.program);
    // random filter keeping argument 1 of all u-symbols, tuples mirrored
    ArgumentFilter pi;
    for (SymbolId s : trs_symbols(rpt)) {
      std::vector<int> kept;
      for (int i = 1; i <= t[s].arity; ++i) {
        if (t[s].kind == SymbolKind::U && i == 1) {
          kept.push_back(i);
          continue;
        }
        if (g.coin()) kept.push_back(i);
      }
      pi.set(s, kept);
    }
    for (SymbolId f : rpt.defined()) pi.set(t.tuple_of(f), pi.at(f, t));

    Trs lhs = dependency_pairs(apply_filter(rpt, pi, t), t);
    Trs rhs = apply_filter(dependency_pairs(rpt, t), pi, t);
    std::multiset<std::string> ls, rs;
    for (const Rule& r : lhs.rules) ls.insert(to_string(r, t, rpt.var_names));
    for (const Rule& r : rhs.rules) rs.insert(to_string(r, t, rpt.var_names));
    CHECK(ls == rs);
  }
}
