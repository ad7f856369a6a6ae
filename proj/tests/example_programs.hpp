#pragma once

// Shared corpus for the unit and acceptance suites. The same programs ship
// under programs/ for CLI runs.

namespace examples {

inline const char* ex12 = R"(
%query: p(i,o)
p(X, X).
p(f(X), g(Y)) :- p(f(X), f(Z)), p(Z, g(Y)).
)";

// Non-well-moded variant: g(W) in the second body atom.
inline const char* ex13 = R"(
%query: p(i,o)
p(X, X).
p(f(X), g(Y)) :- p(f(X), f(Z)), p(Z, g(W)).
)";

inline const char* append = R"(
%query: append(i,o,o)
append([], M, M).
append([X|L], M, [X|N]) :- append(L, M, N).
)";

inline const char* rotate = R"(
%filter: rotate=[1], '.'=[2]
append([], M, M).
append([X|L], M, [X|N]) :- append(L, M, N).
rotate(N, O) :- append(L, M, N), append(M, L, O).
)";

inline const char* safeinv = R"(
%query: safeinv(i,o)
nat(0).
nat(s(X)) :- nat(X).
inv(neg(X), pos(X)).
inv(pos(X), neg(X)).
safeinv(X, neg(Y)) :- inv(X, neg(Y)), nat(Y).
safeinv(X, pos(Y)) :- inv(X, pos(Y)), nat(Y).
)";

inline const char* ordered = R"(
%filter: ordered=[]
ordered(cons(X, cons(s(X), XS))) :- ordered(cons(s(X), XS)).
)";

inline const char* pequal = R"(
%filter: p=[]
p(X) :- equal(X, s(X)), p(X).
equal(X, X).
)";

// Limitation example (2) of the closing discussion: provably terminating for
// ground p-queries, but no argument filter admits a proof.
inline const char* lim2 = R"(
%query: p(i)
p(X) :- q(f(Y)), p(Y).
p(g(X)) :- p(X).
q(g(Y)).
)";

// Limitation example (3): needs polynomial coefficients up to 5.
inline const char* lim3 = R"(
%query: f(i,i)
f(X, Y) :- g(s(s(s(s(s(X))))), Y).
f(s(X), Y) :- f(X, Y).
g(s(s(s(s(s(s(X)))))), Y) :- f(X, Y).
)";

}  // namespace examples
