#include "lpterm/unify.hpp"

namespace lpterm {

Term Substitution::apply(const Term& t) const {
  if (t.is_var()) {
    auto it = bind.find(t.var());
    if (it == bind.end()) return t;
    return it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply(a));
  return Term::app(t.sym(), std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(t));
  return out;
}

namespace {

bool unify_into(const Term& s, const Term& t, Substitution& sub) {
  Term a = sub.apply(s);
  Term b = sub.apply(t);
  if (a.is_var() && b.is_var() && a.var() == b.var()) return true;
  if (a.is_var() || b.is_var()) {
    if (!a.is_var()) std::swap(a, b);
    if (contains_var(b, a.var())) return false;  // occur check
    // Keep the substitution resolved.
    Substitution single;
    single.bind.emplace(a.var(), b);
    for (auto& [v, bt] : sub.bind) bt = single.apply(bt);
    sub.bind[a.var()] = b;
    return true;
  }
  if (a.sym() != b.sym() || a.args().size() != b.args().size()) return false;
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!unify_into(a.args()[i], b.args()[i], sub)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify_finite(const Term& s, const Term& t) {
  Substitution sub;
  if (!unify_into(s, t, sub)) return std::nullopt;
  return sub;
}

std::optional<Substitution> unify_finite(const Atom& s, const Atom& t) {
  if (s.pred != t.pred || s.args.size() != t.args.size()) return std::nullopt;
  Substitution sub;
  for (size_t i = 0; i < s.args.size(); ++i)
    if (!unify_into(s.args[i], t.args[i], sub)) return std::nullopt;
  return sub;
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& sub) {
  if (pattern.is_var()) {
    auto it = sub.bind.find(pattern.var());
    if (it != sub.bind.end()) return it->second == subject;
    sub.bind.emplace(pattern.var(), subject);
    return true;
  }
  if (subject.is_var()) return false;
  if (pattern.sym() != subject.sym()) return false;
  for (size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.args()[i], subject.args()[i], sub)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution sub;
  if (!match_into(pattern, subject, sub)) return std::nullopt;
  return sub;
}

}  // namespace lpterm
