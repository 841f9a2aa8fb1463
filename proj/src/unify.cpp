#include "posres/unify.hpp"

#include <map>
#include <utility>
#include <vector>

namespace posres {

namespace {

bool unify_into(std::vector<std::pair<Term, Term>> work, Substitution& s) {
  while (!work.empty()) {
    auto [a, b] = std::move(work.back());
    work.pop_back();
    a = s.apply(a);
    b = s.apply(b);
    if (a == b) continue;
    if (!a.is_variable() && b.is_variable()) std::swap(a, b);
    if (a.is_variable()) {
      if (b.contains_variable(a.name())) return false;
      s.bind(a.name(), b);
      continue;
    }
    if (a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size())
      return false;
    for (std::size_t i = 0; i < a.args().size(); ++i) work.emplace_back(a.args()[i], b.args()[i]);
  }
  return true;
}

std::vector<std::string> ordered_variables(const WeightedClause& c) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto visit = [&](const Term& t, auto&& self) -> void {
    if (t.is_variable()) {
      if (seen.insert(t.name()).second) out.push_back(t.name());
      return;
    }
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& l : c.clause)
    for (const auto& a : l.atom.args) visit(a, visit);
  for (const auto& v : c.valuation.weight.free_variables())
    if (seen.insert(v).second) out.push_back(v);
  return out;
}

}  // namespace

std::optional<Substitution> mgu(const Term& a, const Term& b) {
  Substitution s;
  if (!unify_into({{a, b}}, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) return std::nullopt;
  std::vector<std::pair<Term, Term>> work;
  for (std::size_t i = a.args.size(); i-- > 0;) work.emplace_back(a.args[i], b.args[i]);
  Substitution s;
  if (!unify_into(std::move(work), s)) return std::nullopt;
  return s;
}

std::optional<Substitution> mgu(const Literal& a, const Literal& b) { return mgu(a.atom, b.atom); }

bool match(const Term& pattern, const Term& target, Substitution& s) {
  if (pattern.is_variable()) {
    if (const Term* bound = s.find(pattern.name())) return *bound == target;
    s.set(pattern.name(), target);
    return true;
  }
  if (pattern.kind() != target.kind() || pattern.name() != target.name() ||
      pattern.args().size() != target.args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match(pattern.args()[i], target.args()[i], s)) return false;
  return true;
}

bool match(const Atom& pattern, const Atom& target, Substitution& s) {
  if (pattern.predicate != target.predicate || pattern.args.size() != target.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match(pattern.args[i], target.args[i], s)) return false;
  return true;
}

WeightedClause apply_subst(const WeightedClause& c, const Substitution& s) {
  return {s.apply(c.clause), {c.valuation.kind, c.valuation.weight.substitute(s)}, c.label};
}

WeightedClause rename_apart(const WeightedClause& c, std::size_t seed) {
  auto vars = ordered_variables(c);
  if (vars.empty()) return c;
  Substitution s;
  std::map<std::string, int> uses;
  for (const auto& v : vars) {
    std::string name = variable_base(v) + "_" + std::to_string(seed);
    if (int n = uses[name]++; n > 0) name += "_" + std::to_string(n);
    s.set(v, Term::variable(name));
  }
  return apply_subst(c, s);
}

WeightedClause normalize_variables(const WeightedClause& c) {
  auto vars = ordered_variables(c);
  if (vars.empty()) return c;
  std::map<std::string, int> per_base;
  for (const auto& v : vars) ++per_base[variable_base(v)];
  std::map<std::string, int> next;
  Substitution s;
  bool identity = true;
  for (const auto& v : vars) {
    std::string base = variable_base(v);
    std::string name = per_base[base] == 1 ? base : base + "_" + std::to_string(++next[base]);
    if (name != v) identity = false;
    s.set(v, Term::variable(name));
  }
  return identity ? c : apply_subst(c, s);
}

}  // namespace posres
