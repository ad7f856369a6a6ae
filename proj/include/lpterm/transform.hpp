#pragma once

#include <variant>

#include "lpterm/program.hpp"
#include "lpterm/trs.hpp"

namespace lpterm {

// The moding-free transformation: p_in/p_out keep all argument positions,
// u-symbols thread the accumulated clause variables. u-symbols are numbered
// globally in clause order, matching the printed examples.
Trs transform_new(const Program& p);

struct NotWellModed {
  WellModedResult witness;
};

// Classical moded transformation; requires well-modedness.
std::variant<Trs, NotWellModed> transform_classical(const Program& p, const Moding& m);

// Argument filter induced by a moding over the transform_new signature:
// pi_m(p_in) = pi_m(P_in) = input positions, pi_m(p_out) = output positions,
// everything else keeps full arity.
ArgumentFilter induced_filter(const Moding& m, const Program& p, const Trs& rp);

// Extends a user filter over (Sigma, Delta) to the TRS signature:
// pi(p_in) = pi(P_in) = pi(p); p_out, u-symbols and their tuples keep full
// arity; Sigma symbols keep the user entries.
ArgumentFilter extend_initial_filter(const ArgumentFilter& user, const Program& p,
                                     const Trs& rp);

std::set<SymbolId> trs_symbols(const Trs& r);
// Walks base links of an In/Out symbol back to its predicate (-1 if none).
SymbolId base_predicate(const SymbolTable& table, SymbolId s);

}  // namespace lpterm
