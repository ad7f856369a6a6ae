#include "lpterm/transform.hpp"

#include <algorithm>
#include <set>

namespace lpterm {

namespace {

void collect_atom_vars(const Atom& a, std::vector<int>& out) {
  for (const Term& t : a.args) collect_vars(t, out);
}

std::vector<Term> var_terms(const std::vector<int>& vars) {
  std::vector<Term> out;
  out.reserve(vars.size());
  for (int v : vars) out.push_back(Term::var(v));
  return out;
}

Term atom_as(const Atom& a, SymbolId sym) {
  std::vector<Term> args = a.args;
  return Term::app(sym, std::move(args));
}

void collect_symbols(const Term& t, std::set<SymbolId>& out) {
  if (t.is_var()) return;
  out.insert(t.sym());
  for (const Term& a : t.args()) collect_symbols(a, out);
}

}  // namespace

std::set<SymbolId> trs_symbols(const Trs& r) {
  std::set<SymbolId> out;
  for (const Rule& rule : r.rules) {
    collect_symbols(rule.lhs, out);
    collect_symbols(rule.rhs, out);
  }
  return out;
}

SymbolId base_predicate(const SymbolTable& table, SymbolId s) {
  SymbolId cur = s;
  while (cur >= 0 && table[cur].kind != SymbolKind::Predicate) cur = table[cur].base;
  return cur;
}

Trs transform_new(const Program& p) {
  SymbolTable& table = *p.table;
  Trs out;
  out.var_names = p.var_names;
  int u_counter = 0;
  for (size_t ci = 0; ci < p.clauses.size(); ++ci) {
    const Clause& c = p.clauses[ci];
    const SymbolData& pd = table[c.head.pred];
    SymbolId p_in = table.intern(pd.name, pd.arity, SymbolKind::In, std::nullopt, c.head.pred);
    SymbolId p_out = table.intern(pd.name, pd.arity, SymbolKind::Out, std::nullopt, c.head.pred);

    if (c.body.empty()) {
      out.rules.push_back(Rule{atom_as(c.head, p_in), atom_as(c.head, p_out)});
      out.rule_clause.push_back(static_cast<int>(ci));
      continue;
    }

    std::vector<int> acc;  // V(s) u V(s_1) u ... in first-occurrence order
    collect_atom_vars(c.head, acc);
    Term lhs = atom_as(c.head, p_in);
    for (size_t bi = 0; bi < c.body.size(); ++bi) {
      const Atom& b = c.body[bi];
      const SymbolData& bd = table[b.pred];
      SymbolId b_in = table.intern(bd.name, bd.arity, SymbolKind::In, std::nullopt, b.pred);
      SymbolId b_out = table.intern(bd.name, bd.arity, SymbolKind::Out, std::nullopt, b.pred);
      SymbolId u = table.intern("u" + std::to_string(++u_counter),
                                1 + static_cast<int>(acc.size()), SymbolKind::U);
      std::vector<Term> u_args_in{atom_as(b, b_in)};
      std::vector<Term> u_args_out{atom_as(b, b_out)};
      for (const Term& v : var_terms(acc)) {
        u_args_in.push_back(v);
        u_args_out.push_back(v);
      }
      out.rules.push_back(Rule{lhs, Term::app(u, std::move(u_args_in))});
      out.rule_clause.push_back(static_cast<int>(ci));
      lhs = Term::app(u, std::move(u_args_out));
      collect_atom_vars(b, acc);
    }
    out.rules.push_back(Rule{lhs, atom_as(c.head, p_out)});
    out.rule_clause.push_back(static_cast<int>(ci));
  }
  return out;
}

namespace {

std::vector<Term> moded_args(const Atom& a, const std::vector<int>& positions) {
  std::vector<Term> out;
  for (int i : positions) out.push_back(a.args[static_cast<size_t>(i) - 1]);
  return out;
}

// Variables of `keep`, ordered by first occurrence in the full head/body
// prefix. This order makes the subsumption identity with the filtered new
// transformation syntactic.
std::vector<int> ordered_restriction(const std::vector<int>& prefix_order,
                                     const std::set<int>& keep) {
  std::vector<int> out;
  for (int v : prefix_order)
    if (keep.count(v)) out.push_back(v);
  return out;
}

}  // namespace

std::variant<Trs, NotWellModed> transform_classical(const Program& p, const Moding& m) {
  WellModedResult wm = check_well_moded(p, m);
  if (!wm.ok) return NotWellModed{wm};

  SymbolTable& table = *p.table;
  Trs out;
  out.var_names = p.var_names;
  int u_counter = 0;
  for (size_t ci = 0; ci < p.clauses.size(); ++ci) {
    const Clause& c = p.clauses[ci];
    const SymbolData& pd = table[c.head.pred];
    auto in_pos = m.input_positions(c.head.pred, table);
    auto out_pos = m.output_positions(c.head.pred, table);
    SymbolId p_in = table.intern(pd.name, static_cast<int>(in_pos.size()), SymbolKind::In,
                                 std::nullopt, c.head.pred);
    SymbolId p_out = table.intern(pd.name, static_cast<int>(out_pos.size()), SymbolKind::Out,
                                  std::nullopt, c.head.pred);
    Term head_in = Term::app(p_in, moded_args(c.head, in_pos));
    Term head_out = Term::app(p_out, moded_args(c.head, out_pos));

    if (c.body.empty()) {
      out.rules.push_back(Rule{head_in, head_out});
      out.rule_clause.push_back(static_cast<int>(ci));
      continue;
    }

    std::vector<int> prefix_order;
    collect_atom_vars(c.head, prefix_order);
    std::set<int> acc_set;
    for (int i : in_pos)
      for (int v : vars_of(c.head.args[static_cast<size_t>(i) - 1])) acc_set.insert(v);

    Term lhs = head_in;
    for (size_t bi = 0; bi < c.body.size(); ++bi) {
      const Atom& b = c.body[bi];
      const SymbolData& bd = table[b.pred];
      auto b_in_pos = m.input_positions(b.pred, table);
      auto b_out_pos = m.output_positions(b.pred, table);
      SymbolId b_in = table.intern(bd.name, static_cast<int>(b_in_pos.size()), SymbolKind::In,
                                   std::nullopt, b.pred);
      SymbolId b_out = table.intern(bd.name, static_cast<int>(b_out_pos.size()), SymbolKind::Out,
                                    std::nullopt, b.pred);
      std::vector<int> acc = ordered_restriction(prefix_order, acc_set);
      SymbolId u = table.intern("u" + std::to_string(++u_counter),
                                1 + static_cast<int>(acc.size()), SymbolKind::U);
      std::vector<Term> u_args_in{Term::app(b_in, moded_args(b, b_in_pos))};
      std::vector<Term> u_args_out{Term::app(b_out, moded_args(b, b_out_pos))};
      for (const Term& v : var_terms(acc)) {
        u_args_in.push_back(v);
        u_args_out.push_back(v);
      }
      out.rules.push_back(Rule{lhs, Term::app(u, std::move(u_args_in))});
      out.rule_clause.push_back(static_cast<int>(ci));
      lhs = Term::app(u, std::move(u_args_out));
      collect_atom_vars(b, prefix_order);
      for (int i : b_out_pos)
        for (int v : vars_of(b.args[static_cast<size_t>(i) - 1])) acc_set.insert(v);
    }
    out.rules.push_back(Rule{lhs, head_out});
    out.rule_clause.push_back(static_cast<int>(ci));
  }
  return out;
}

ArgumentFilter induced_filter(const Moding& m, const Program& p, const Trs& rp) {
  const SymbolTable& table = *p.table;
  ArgumentFilter pi;
  for (SymbolId s : trs_symbols(rp)) {
    const SymbolData& d = table[s];
    switch (d.kind) {
      case SymbolKind::In:
        pi.set(s, m.input_positions(base_predicate(table, s), table));
        break;
      case SymbolKind::Out:
        pi.set(s, m.output_positions(base_predicate(table, s), table));
        break;
      default:
        pi.set_full(s, d.arity);
        break;
    }
  }
  for (SymbolId f : p.sigma())
    if (!pi.has(f)) pi.set_full(f, table[f].arity);
  return pi;
}

ArgumentFilter extend_initial_filter(const ArgumentFilter& user, const Program& p,
                                     const Trs& rp) {
  const SymbolTable& table = *p.table;
  ArgumentFilter pi;
  for (SymbolId f : p.sigma()) {
    if (user.has(f))
      pi.set(f, user.at(f, table));
    else
      pi.set_full(f, table[f].arity);
  }
  for (SymbolId s : trs_symbols(rp)) {
    const SymbolData& d = table[s];
    if (d.kind == SymbolKind::In) {
      SymbolId pred = base_predicate(table, s);
      if (pred >= 0 && user.has(pred))
        pi.set(s, user.at(pred, table));
      else
        pi.set_full(s, d.arity);
    } else if (!pi.has(s)) {
      pi.set_full(s, d.arity);
    }
  }
  return pi;
}

}  // namespace lpterm
