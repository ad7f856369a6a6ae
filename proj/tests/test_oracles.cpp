#include <doctest.h>

#include <algorithm>

#include "example_programs.hpp"
#include "lpterm/oracles.hpp"
#include "lpterm/parser.hpp"
#include "lpterm/transform.hpp"

using namespace lpterm;

namespace {

Atom make_query(const Program& p, const std::string& pred, std::vector<Term> args) {
  for (SymbolId q : p.predicates)
    if ((*p.table)[q].name == pred) return Atom{q, std::move(args)};
  throw std::runtime_error("no predicate " + pred);
}

}  // namespace

TEST_CASE("sld_derive solves an append query in two steps") {
  Program p = parse_program(examples::append);
  SymbolTable& t = *p.table;
  SymbolId cons = *t.lookup(".", 2, SymbolKind::Function);
  SymbolId nil = *t.lookup("[]", 0, SymbolKind::Function);
  SymbolId a = t.intern("a", 0, SymbolKind::Function);
  SymbolId b = t.intern("b", 0, SymbolKind::Function);
  Term la = Term::app(cons, {Term::app(a), Term::app(nil)});
  Term lb = Term::app(cons, {Term::app(b), Term::app(nil)});
  int z = p.next_var;
  p.var_names.names[z] = "Z";

  DerivationTrace trace = sld_derive(p, {make_query(p, "append", {la, lb, Term::var(z)})}, 50);
  CHECK(trace.outcome == SldOutcome::Success);
  CHECK(trace.steps == 2);
  REQUIRE(trace.answer.size() == 1);
  CHECK(trace.answer[0].first == "Z");
  CHECK(trace.answer[0].second == ".(a,.(b,[]))");  // [a,b]
}

TEST_CASE("sld_derive reports depth-exceeded for the non-terminating ordered query") {
  Program p = parse_program(examples::ordered);
  int ys = p.next_var;
  DerivationTrace trace = sld_derive(p, {make_query(p, "ordered", {Term::var(ys)})}, 50);
  CHECK(trace.outcome == SldOutcome::DepthExceeded);
  CHECK(trace.steps == 50);
}

TEST_CASE("sld_derive without occur check binds rational terms") {
  Program p = parse_program(examples::pequal);
  int x = p.next_var;
  p.var_names.names[x] = "Q";
  DerivationTrace trace = sld_derive(p, {make_query(p, "p", {Term::var(x)})}, 50);
  CHECK(trace.outcome == SldOutcome::DepthExceeded);
  REQUIRE(trace.answer.size() == 1);
  // the query variable is bound to the rational term s(s(...))
  CHECK(trace.answer[0].second == "s(...)");
}

TEST_CASE("sld_derive reports exhaustive failure") {
  Program p = parse_program("q(a).");
  SymbolId b = p.table->intern("b", 0, SymbolKind::Function);
  DerivationTrace trace = sld_derive(p, {make_query(p, "q", {Term::app(b)})}, 50);
  CHECK(trace.outcome == SldOutcome::Failure);
}

TEST_CASE("rewrite_bounded pumps the non-terminating classical TRS to the bound") {
  Program p = parse_program(examples::ex12);
  QuerySpec spec = parse_query_spec(examples::ex12, p);
  auto classical = transform_classical(p, *spec.moding);
  REQUIRE(std::holds_alternative<Trs>(classical));
  const Trs& r = std::get<Trs>(classical);
  SymbolTable& t = *p.table;
  SymbolId p_in1 = *t.lookup("p", 1, SymbolKind::In);
  SymbolId f = *t.lookup("f", 1, SymbolKind::Function);
  SymbolId a = t.intern("a", 0, SymbolKind::Function);
  Term start = Term::app(p_in1, {Term::app(f, {Term::app(a)})});
  CHECK(rewrite_bounded(r, start, 10, t) >= 10);
  CHECK(rewrite_bounded(r, start, 50, t) >= 50);
}

TEST_CASE("rewrite_bounded counts the s-tower") {
  SymbolTable t;
  SymbolId f = t.intern("f", 1, SymbolKind::In);
  SymbolId s = t.intern("s", 1, SymbolKind::Function);
  SymbolId a = t.intern("a", 0, SymbolKind::Function);
  Trs r;
  r.rules.push_back(Rule{Term::app(f, {Term::app(s, {Term::var(0)})}),
                         Term::app(f, {Term::var(0)})});
  r.rule_clause.push_back(-1);
  Term start = Term::app(f, {Term::app(s, {Term::app(s, {Term::app(a)})})});
  CHECK(rewrite_bounded(r, start, 10, t) == 2);
}

TEST_CASE("rewrite_bounded on the moding-free TRS stays finite from a ground start") {
  Program p = parse_program(examples::ex12);
  Trs rp = transform_new(p);
  SymbolTable& t = *p.table;
  SymbolId p_in = *t.lookup("p", 2, SymbolKind::In);
  SymbolId f = *t.lookup("f", 1, SymbolKind::Function);
  SymbolId g = *t.lookup("g", 1, SymbolKind::Function);
  SymbolId a = t.intern("a", 0, SymbolKind::Function);
  SymbolId b = t.intern("b", 0, SymbolKind::Function);
  Term start = Term::app(p_in, {Term::app(f, {Term::app(a)}), Term::app(g, {Term::app(b)})});
  // exhaustive search: p_in(f(a),g(b)) -> u1(p_in(f(a),f(a)),a,b)
  //   -> u1(p_out(f(a),f(a)),a,b) -> u2(p_in(a,g(b)),a,b,a), then stuck
  CHECK(rewrite_bounded(rp, start, 100, t) == 3);
}

TEST_CASE("successful derivations replay as rewrite sequences (Lemma 3.2 shape)") {
  Program p = parse_program(examples::append);
  SymbolTable& t = *p.table;
  SymbolId cons = *t.lookup(".", 2, SymbolKind::Function);
  SymbolId nil = *t.lookup("[]", 0, SymbolKind::Function);
  SymbolId a = t.intern("a", 0, SymbolKind::Function);
  Term la = Term::app(cons, {Term::app(a), Term::app(nil)});
  Term lb = Term::app(cons, {Term::app(a), Term::app(a)});

  Atom query = make_query(p, "append", {la, lb, Term::app(cons, {Term::app(a), lb})});
  // append([a], [a|a], [a,[a|a]])? ground query: [a|lb] = .(a, .(a,a))
  Term expect = Term::app(cons, {Term::app(a), lb});
  (void)expect;
  DerivationTrace trace = sld_derive(p, {query}, 50);
  REQUIRE(trace.outcome == SldOutcome::Success);

  Trs rp = transform_new(p);
  SymbolId app_in = *t.lookup("append", 3, SymbolKind::In);
  SymbolId app_out = *t.lookup("append", 3, SymbolKind::Out);
  Term from = Term::app(app_in, {query.args[0], query.args[1], query.args[2]});
  Term target = Term::app(app_out, {query.args[0], query.args[1], query.args[2]});
  int len = rewrite_reach_length(rp, from, target, 2 * trace.steps + 2, t, trace.binding_pool);
  CHECK(len >= trace.steps);
}
