#include "lpterm/program.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lpterm {

std::vector<SymbolId> Program::sigma() const {
  std::vector<SymbolId> s = functions;
  if (fresh_constant) s.push_back(*fresh_constant);
  return s;
}

const std::vector<Mode>& Moding::of(SymbolId p, const SymbolTable& table) const {
  static thread_local std::vector<Mode> all_in;
  auto it = modes.find(p);
  if (it != modes.end()) return it->second;
  all_in.assign(static_cast<size_t>(table[p].arity), Mode::In);
  return all_in;
}

std::vector<int> Moding::input_positions(SymbolId p, const SymbolTable& table) const {
  const auto& m = of(p, table);
  std::vector<int> out;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] == Mode::In) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Moding::output_positions(SymbolId p, const SymbolTable& table) const {
  const auto& m = of(p, table);
  std::vector<int> out;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] == Mode::Out) out.push_back(static_cast<int>(i) + 1);
  return out;
}

namespace {

void vars_on_positions(const Atom& a, const std::vector<int>& positions, std::set<int>& out) {
  for (int i : positions)
    for (int v : vars_of(a.args[static_cast<size_t>(i) - 1])) out.insert(v);
}

}  // namespace

WellModedResult check_well_moded(const Program& p, const Moding& m) {
  const SymbolTable& table = *p.table;
  for (size_t ci = 0; ci < p.clauses.size(); ++ci) {
    const Clause& c = p.clauses[ci];
    std::set<int> head_in, head_out;
    vars_on_positions(c.head, m.input_positions(c.head.pred, table), head_in);
    vars_on_positions(c.head, m.output_positions(c.head.pred, table), head_out);

    std::set<int> body_out_all;
    for (const Atom& b : c.body)
      vars_on_positions(b, m.output_positions(b.pred, table), body_out_all);

    // (a) V_out(H)  subset of  V_in(H) u V_out(B_1..B_k)
    for (int v : head_out) {
      if (!head_in.count(v) && !body_out_all.count(v))
        return WellModedResult{false, static_cast<int>(ci), 'a', -1, v};
    }

    // (b) V_in(B_i)  subset of  V_in(H) u V_out(B_1..B_{i-1})
    std::set<int> avail = head_in;
    for (size_t bi = 0; bi < c.body.size(); ++bi) {
      std::set<int> in_i;
      vars_on_positions(c.body[bi], m.input_positions(c.body[bi].pred, table), in_i);
      for (int v : in_i) {
        if (!avail.count(v))
          return WellModedResult{false, static_cast<int>(ci), 'b', static_cast<int>(bi), v};
      }
      vars_on_positions(c.body[bi], m.output_positions(c.body[bi].pred, table), avail);
    }
  }
  return WellModedResult{};
}

ArgumentFilter initial_filter(const QuerySpec& spec, const Program& p) {
  const SymbolTable& table = *p.table;
  ArgumentFilter pi;
  for (SymbolId f : p.sigma()) pi.set_full(f, table[f].arity);
  for (SymbolId q : p.predicates) pi.set_full(q, table[q].arity);
  if (spec.moding) {
    for (SymbolId q : p.predicates)
      pi.set(q, spec.moding->input_positions(q, table));
  } else if (spec.filter) {
    for (const auto& [sym, kept] : spec.filter->entries()) pi.set(sym, kept);
  }
  return pi;
}

namespace {

bool plain_atom_name(const std::string& s) {
  if (s.empty() || !(std::islower(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string atom_name(const std::string& s) {
  if (plain_atom_name(s) || all_digits(s) || s == "[]") return s;
  return "'" + s + "'";
}

bool is_cons(const SymbolTable& table, const Term& t) {
  return !t.is_var() && table[t.sym()].name == "." && t.args().size() == 2;
}

bool is_nil(const SymbolTable& table, const Term& t) {
  return !t.is_var() && table[t.sym()].name == "[]" && t.args().empty();
}

std::string print_source_term(const Term& t, const SymbolTable& table, const VarNames& vars) {
  if (t.is_var()) return vars.of(t.var());
  if (is_cons(table, t)) {
    std::string s = "[" + print_source_term(t.args()[0], table, vars);
    Term rest = t.args()[1];
    while (is_cons(table, rest)) {
      s += "," + print_source_term(rest.args()[0], table, vars);
      rest = rest.args()[1];
    }
    if (is_nil(table, rest)) return s + "]";
    return s + "|" + print_source_term(rest, table, vars) + "]";
  }
  std::string s = atom_name(table[t.sym()].name);
  if (t.args().empty()) return s;
  s += "(";
  for (size_t i = 0; i < t.args().size(); ++i) {
    if (i) s += ",";
    s += print_source_term(t.args()[i], table, vars);
  }
  return s + ")";
}

std::string print_source_atom(const Atom& a, const SymbolTable& table, const VarNames& vars) {
  std::string s = atom_name(table[a.pred].name);
  if (a.args.empty()) return s;
  s += "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += print_source_term(a.args[i], table, vars);
  }
  return s + ")";
}

}  // namespace

std::string to_string(const Clause& c, const SymbolTable& table, const VarNames& vars) {
  std::string s = print_source_atom(c.head, table, vars);
  if (!c.body.empty()) {
    s += " :- ";
    for (size_t i = 0; i < c.body.size(); ++i) {
      if (i) s += ", ";
      s += print_source_atom(c.body[i], table, vars);
    }
  }
  return s + ".";
}

std::string to_string(const Program& p) {
  std::string s;
  for (const Clause& c : p.clauses) {
    s += to_string(c, *p.table, p.var_names);
    s += "\n";
  }
  return s;
}

}  // namespace lpterm
