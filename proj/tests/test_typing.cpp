#include <doctest.h>

#include "example_programs.hpp"
#include "lpterm/parser.hpp"
#include "lpterm/typing.hpp"

using namespace lpterm;

TEST_CASE("infer_types finds the two classes of the p/f/g variant") {
  Program p = parse_program(examples::ex13);
  TypeAssignment tau = infer_types(p);
  const SymbolTable& t = *p.table;
  SymbolId pp = p.predicates[0];
  SymbolId f = *t.lookup("f", 1, SymbolKind::Function);
  SymbolId g = *t.lookup("g", 1, SymbolKind::Function);

  // tau(p) = tau(f) = (a,a), tau(g) = (b,a)
  CHECK(tau.types.at(pp)[0] == tau.types.at(pp)[1]);
  CHECK(tau.types.at(f) == tau.types.at(pp));
  CHECK(tau.types.at(g)[1] == tau.types.at(pp)[0]);
  CHECK(tau.types.at(g)[0] != tau.types.at(g)[1]);

  CHECK(reflexive_positions(f, tau, t) == std::set<int>{1});
  CHECK(reflexive_positions(g, tau, t) == std::set<int>{});
  PositionTable pt = compute_position_table(tau, t);
  CHECK(pt.unbounded.at(g) == std::set<int>{});
  CHECK(pt.unbounded.at(f) == std::set<int>{1});
}

TEST_CASE("infer_types on a single fact") {
  Program p = parse_program("q(a).");
  TypeAssignment tau = infer_types(p);
  SymbolId q = p.predicates[0];
  SymbolId a = p.functions[0];
  CHECK(tau.types.at(q)[0] == tau.types.at(a)[0]);  // result type of a
  CHECK(reflexive_positions(a, tau, *p.table).empty());
}

TEST_CASE("infer_types on the sign-inversion program") {
  Program p = parse_program(examples::safeinv);
  TypeAssignment tau = infer_types(p);
  const SymbolTable& t = *p.table;
  SymbolId s = *t.lookup("s", 1, SymbolKind::Function);
  SymbolId zero = *t.lookup("0", 0, SymbolKind::Function);
  SymbolId neg = *t.lookup("neg", 1, SymbolKind::Function);
  SymbolId pos = *t.lookup("pos", 1, SymbolKind::Function);

  // tau(s) = (b,b), tau(0) = (b), tau(neg) = tau(pos) = (b,a)
  int b = tau.types.at(s)[1];
  CHECK(tau.types.at(s)[0] == b);
  CHECK(tau.types.at(zero)[0] == b);
  CHECK(tau.types.at(neg)[0] == b);
  CHECK(tau.types.at(pos) == tau.types.at(neg));
  CHECK(tau.types.at(neg)[1] != b);

  CHECK(reflexive_positions(s, tau, t) == std::set<int>{1});
  CHECK(reflexive_positions(neg, tau, t).empty());

  // neg's position is not reflexive but still unbounded (through s)
  PositionTable pt = compute_position_table(tau, t);
  CHECK(pt.unbounded.at(neg) == std::set<int>{1});
  CHECK(pt.unbounded.at(pos) == std::set<int>{1});
  CHECK(pt.unbounded.at(s) == std::set<int>{1});
  CHECK(unbounded_positions(neg, tau, t) == std::set<int>{1});
}

TEST_CASE("reflexive positions are always unbounded") {
  for (const char* src : {examples::ex12, examples::ex13, examples::append,
                          examples::rotate, examples::safeinv, examples::ordered,
                          examples::pequal, examples::lim2, examples::lim3}) {
    Program p = parse_program(src);
    TypeAssignment tau = infer_types(p);
    PositionTable pt = compute_position_table(tau, *p.table);
    for (SymbolId f : p.sigma()) {
      for (int i : pt.reflexive.at(f)) CHECK(pt.unbounded.at(f).count(i) == 1);
    }
  }
}

TEST_CASE("variable renaming does not change the inferred partition") {
  Program p1 = parse_program("p(X, X). p(f(X), g(Y)) :- p(f(X), f(Z)), p(Z, g(W)).");
  Program p2 = parse_program("p(A, A). p(f(B), g(C)) :- p(f(B), f(D)), p(D, g(E)).");
  TypeAssignment t1 = infer_types(p1);
  TypeAssignment t2 = infer_types(p2);
  // same symbols intern in the same order in both tables
  for (const auto& [sym, types] : t1.types) CHECK(types == t2.types.at(sym));
}
