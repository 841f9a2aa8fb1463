#include "posres/term.hpp"

#include <algorithm>
#include <cctype>

#include "posres/degree.hpp"

namespace posres {

namespace {

template <typename T>
std::strong_ordering compare_vectors(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string join_args(const std::vector<Term>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i].to_string();
  }
  return out;
}

}  // namespace

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.name_ = std::move(name);
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::Constant;
  t.name_ = std::move(name);
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(functor));
  Term t;
  t.kind_ = Kind::Compound;
  t.name_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

bool Term::is_ground() const {
  if (kind_ == Kind::Variable) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::is_numeric() const {
  if (kind_ != Kind::Constant || name_.empty()) return false;
  char c = name_.front();
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (kind_ == Kind::Variable) {
    out.insert(name_);
    return;
  }
  for (const auto& a : args_) a.collect_variables(out);
}

bool Term::contains_variable(const std::string& v) const {
  if (kind_ == Kind::Variable) return name_ == v;
  return std::any_of(args_.begin(), args_.end(),
                     [&](const Term& a) { return a.contains_variable(v); });
}

std::string Term::to_string() const {
  if (kind_ != Kind::Compound) return name_;
  return name_ + "(" + join_args(args_) + ")";
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return compare_vectors(a.args_, b.args_);
}

bool is_variable_name(const std::string& s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string variable_base(const std::string& v) {
  return v.substr(0, v.find('_'));
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

std::string Atom::to_string() const {
  if (args.empty()) return predicate;
  return predicate + "(" + join_args(args) + ")";
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return compare_vectors(a.args, b.args);
}

std::string Literal::to_string() const {
  return (positive ? "" : "~") + atom.to_string();
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  // Atom first so complementary literals sit next to each other.
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return a.positive <=> b.positive;
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::is_ground() const {
  return std::all_of(lits_.begin(), lits_.end(), [](const Literal& l) { return l.is_ground(); });
}

bool Clause::is_tautology() const {
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i - 1].atom == lits_[i].atom) return true;
  return false;
}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

std::set<std::string> Clause::variables() const {
  std::set<std::string> out;
  for (const auto& l : lits_)
    for (const auto& a : l.atom.args) a.collect_variables(out);
  return out;
}

std::size_t Clause::symbol_count() const {
  std::size_t n = 0;
  auto count = [&](const Term& t, auto&& self) -> void {
    ++n;
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& l : lits_) {
    ++n;
    for (const auto& a : l.atom.args) count(a, count);
  }
  return n;
}

std::string Clause::to_string(const std::string& sep, const std::string& empty_token) const {
  if (lits_.empty()) return empty_token;
  std::string out;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) out += sep;
    out += lits_[i].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  return compare_vectors(a.lits_, b.lits_);
}

const Term* Substitution::find(const std::string& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(const std::string& v, const Term& t) {
  Substitution single;
  single.map_.emplace(v, t);
  for (auto& [k, val] : map_) val = single.apply(val);
  map_[v] = t;
}

Term Substitution::apply(const Term& t) const {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const Term* bound = find(t.name());
      return bound ? *bound : t;
    }
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(apply(a));
      return Term::compound(t.name(), std::move(args));
    }
  }
  return t;
}

Atom Substitution::apply(const Atom& a) const {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(apply(t));
  return out;
}

Literal Substitution::apply(const Literal& l) const { return Literal{l.positive, apply(l.atom)}; }

Clause Substitution::apply(const Clause& c) const {
  if (map_.empty()) return c;
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const auto& l : c) lits.push_back(apply(l));
  return Clause(std::move(lits));
}

std::set<std::string> Substitution::range_variables() const {
  std::set<std::string> out;
  for (const auto& [k, t] : map_) t.collect_variables(out);
  return out;
}

std::string Substitution::to_string() const {
  std::string out;
  for (const auto& [k, t] : map_) {
    if (!out.empty()) out += ",";
    out += k + "=" + t.to_string();
  }
  return out;
}

}  // namespace posres
