#pragma once

#include <map>
#include <optional>

#include "lpterm/term.hpp"

namespace lpterm {

// Finite substitution, resolved (no variable in a binding is itself bound).
struct Substitution {
  std::map<int, Term> bind;

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
};

// Syntactic unification over finite trees with occur check.
// Kept independent of the union-find engine in graph.hpp so the two routes
// can be checked against each other.
std::optional<Substitution> unify_finite(const Term& s, const Term& t);
std::optional<Substitution> unify_finite(const Atom& s, const Atom& t);

// Matching: sigma with pattern*sigma == subject, or nullopt.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

}  // namespace lpterm
