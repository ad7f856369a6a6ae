#include <doctest.h>

#include "example_programs.hpp"
#include "lpterm/parser.hpp"

using namespace lpterm;

TEST_CASE("parse_program reads the p/f/g program") {
  Program p = parse_program(
      "p(X,X). p(f(X),g(Y)) :- p(f(X),f(Z)), p(Z,g(Y)).");
  CHECK(p.clauses.size() == 2);
  CHECK(p.predicates.size() == 1);
  const SymbolTable& t = *p.table;
  CHECK(t[p.predicates[0]].name == "p");
  CHECK(t[p.predicates[0]].arity == 2);
  REQUIRE(p.functions.size() == 2);
  CHECK(t[p.functions[0]].name == "f");
  CHECK(t[p.functions[1]].name == "g");
  // no constant in the source: a fresh one is added
  REQUIRE(p.fresh_constant);
  CHECK(t[*p.fresh_constant].arity == 0);

  // clause 1 head shares one variable
  CHECK(p.clauses[0].head.args[0] == p.clauses[0].head.args[1]);
}

TEST_CASE("parse_program on empty input yields a fresh constant") {
  Program p = parse_program("");
  CHECK(p.clauses.empty());
  REQUIRE(p.fresh_constant);
}

TEST_CASE("parse_program rejects unsupported constructs") {
  CHECK_THROWS_AS(parse_program("p(X) :- \\+ q(X)."), UnsupportedFeature);
  CHECK_THROWS_AS(parse_program("p(X) :- !, q(X)."), UnsupportedFeature);
  CHECK_THROWS_AS(parse_program("p(X) :- is(X, 1)."), UnsupportedFeature);
  CHECK_THROWS_AS(parse_program("p(X) :- X = f(X)."), UnsupportedFeature);
  CHECK_THROWS_AS(parse_program("p(X :- q(X)."), SyntaxError);
  CHECK_THROWS_AS(parse_program("p(a). p(a,b)."), SyntaxError);  // arity clash
}

TEST_CASE("list sugar normalizes to ./2 and []") {
  Program p = parse_program("q([a,b|T]). r([]).");
  const SymbolTable& t = *p.table;
  const Term& list = p.clauses[0].head.args[0];
  CHECK(t[list.sym()].name == ".");
  CHECK(t[list.sym()].arity == 2);
  CHECK(t[list.args()[1].sym()].name == ".");
  CHECK(list.args()[1].args()[1].is_var());
  CHECK(t[p.clauses[1].head.args[0].sym()].name == "[]");
}

TEST_CASE("anonymous variables are fresh per occurrence") {
  Program p = parse_program("q(_, _).");
  CHECK(p.clauses[0].head.args[0].var() != p.clauses[0].head.args[1].var());
}

TEST_CASE("integers parse as constants") {
  Program p = parse_program("q(0, s(0)).");
  CHECK((*p.table)[p.clauses[0].head.args[0].sym()].name == "0");
  CHECK(p.clauses[0].head.args[0].args().empty());
}

TEST_CASE("parse then print then parse is a fixpoint") {
  for (const char* src : {examples::ex12, examples::append, examples::rotate,
                          examples::safeinv, examples::ordered, examples::lim3}) {
    Program p1 = parse_program(src);
    std::string printed = to_string(p1);
    Program p2 = parse_program(printed);
    CHECK(to_string(p2) == printed);
  }
}

TEST_CASE("parse_query_spec reads moding directives") {
  Program p = parse_program(examples::ex12);
  QuerySpec spec = parse_query_spec(examples::ex12, p);
  REQUIRE(spec.moding);
  SymbolId pred = p.predicates[0];
  const auto& modes = spec.moding->of(pred, *p.table);
  REQUIRE(modes.size() == 2);
  CHECK(modes[0] == Mode::In);
  CHECK(modes[1] == Mode::Out);
  CHECK(spec.entry == pred);
}

TEST_CASE("parse_query_spec reads filter directives") {
  Program p = parse_program(examples::rotate);
  QuerySpec spec = parse_query_spec(examples::rotate, p);
  REQUIRE(spec.filter);
  const SymbolTable& t = *p.table;
  SymbolId rotate = *t.lookup("rotate", 2, SymbolKind::Predicate);
  SymbolId cons = *t.lookup(".", 2, SymbolKind::Function);
  CHECK(spec.filter->at(rotate, t) == std::vector<int>{1});
  CHECK(spec.filter->at(cons, t) == std::vector<int>{2});
}

TEST_CASE("parse_query_spec rejects bad modes and unknown symbols") {
  Program p = parse_program("p(a,b,c).");
  CHECK_THROWS_AS(parse_query_spec("%query: p(i,i,x)", p), SyntaxError);
  CHECK_THROWS_AS(parse_query_spec("%query: q(i)", p), UnknownSymbol);
  CHECK_THROWS_AS(parse_query_spec("%query: p(i,i)", p), SyntaxError);
}

TEST_CASE("check_well_moded matches the worked examples") {
  // Ex. 1.2 is well moded for p(in,out)
  Program p12 = parse_program(examples::ex12);
  QuerySpec s12 = parse_query_spec(examples::ex12, p12);
  CHECK(check_well_moded(p12, *s12.moding).ok);

  // the g(W) variant violates condition (a) in clause 2
  Program p13 = parse_program(examples::ex13);
  QuerySpec s13 = parse_query_spec(examples::ex13, p13);
  WellModedResult r13 = check_well_moded(p13, *s13.moding);
  CHECK(!r13.ok);
  CHECK(r13.clause_index == 1);
  CHECK(r13.condition == 'a');

  // append(in,out,out) fails on the fact clause
  Program pa = parse_program(examples::append);
  QuerySpec sa = parse_query_spec(examples::append, pa);
  WellModedResult ra = check_well_moded(pa, *sa.moding);
  CHECK(!ra.ok);
  CHECK(ra.clause_index == 0);
  CHECK(ra.condition == 'a');
}
