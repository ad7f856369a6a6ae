#include "lpterm/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpterm {

namespace {
size_t combine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}
}  // namespace

Term Term::var(int v) {
  auto rep = std::make_shared<Rep>();
  rep->var = v;
  rep->hash = combine(0x5f, static_cast<size_t>(v));
  Term t;
  t.rep_ = std::move(rep);
  return t;
}

Term Term::app(SymbolId s, std::vector<Term> args) {
  auto rep = std::make_shared<Rep>();
  rep->sym = s;
  size_t h = combine(0xa1, static_cast<size_t>(s));
  for (const Term& a : args) h = combine(h, a.hash());
  rep->args = std::move(args);
  rep->hash = h;
  Term t;
  t.rep_ = std::move(rep);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->hash != b.rep_->hash) return false;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var() == b.var();
  if (a.sym() != b.sym()) return false;
  return a.args() == b.args();
}

bool Term::operator<(const Term& other) const {
  if (is_var() != other.is_var()) return is_var();
  if (is_var()) return var() < other.var();
  if (sym() != other.sym()) return sym() < other.sym();
  return std::lexicographical_compare(args().begin(), args().end(),
                                      other.args().begin(), other.args().end(),
                                      [](const Term& a, const Term& b) { return a < b; });
}

std::string VarNames::of(int v) const {
  auto it = names.find(v);
  if (it != names.end()) return it->second;
  return "V" + std::to_string(v);
}

const Term& subterm_at(const Term& t, const Position& pos) {
  const Term* cur = &t;
  for (int i : pos) {
    if (cur->is_var() || i < 1 || i > static_cast<int>(cur->args().size()))
      throw std::out_of_range("invalid position");
    cur = &cur->args()[i - 1];
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& pos, const Term& s) {
  if (pos.empty()) return s;
  if (t.is_var()) throw std::out_of_range("invalid position");
  std::vector<Term> args = t.args();
  int i = pos.front();
  if (i < 1 || i > static_cast<int>(args.size())) throw std::out_of_range("invalid position");
  Position rest(pos.begin() + 1, pos.end());
  args[i - 1] = replace_at(args[i - 1], rest, s);
  return Term::app(t.sym(), std::move(args));
}

bool valid_position(const Term& t, const Position& pos) {
  const Term* cur = &t;
  for (int i : pos) {
    if (cur->is_var() || i < 1 || i > static_cast<int>(cur->args().size())) return false;
    cur = &cur->args()[i - 1];
  }
  return true;
}

void collect_vars(const Term& t, std::vector<int>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.var()) == out.end()) out.push_back(t.var());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::vector<int> vars_of(const Term& t) {
  std::vector<int> out;
  collect_vars(t, out);
  return out;
}

bool contains_var(const Term& t, int v) {
  if (t.is_var()) return t.var() == v;
  for (const Term& a : t.args())
    if (contains_var(a, v)) return true;
  return false;
}

std::string to_string(const Term& t, const SymbolTable& table, const VarNames& vars) {
  if (t.is_var()) return vars.of(t.var());
  std::string s = table.display(t.sym());
  if (t.args().empty()) return s;
  s += "(";
  for (size_t i = 0; i < t.args().size(); ++i) {
    if (i) s += ",";
    s += to_string(t.args()[i], table, vars);
  }
  return s + ")";
}

std::string to_string(const Atom& a, const SymbolTable& table, const VarNames& vars) {
  std::string s = table.display(a.pred);
  if (a.args.empty()) return s;
  s += "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += to_string(a.args[i], table, vars);
  }
  return s + ")";
}

}  // namespace lpterm
