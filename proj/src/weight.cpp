#include "posres/weight.hpp"

#include <algorithm>
#include <optional>

namespace posres {

struct WeightExpr::Node {
  Kind kind = Kind::Const;
  Degree value;
  std::string name;
  std::string domain;
  Term arg;
  Literal literal;
  std::vector<WeightExpr> kids;
};

namespace {

const WeightExpr& zero_weight() {
  static const WeightExpr w = WeightExpr::constant(Degree::zero());
  return w;
}

}  // namespace

WeightExpr::WeightExpr() : node_(zero_weight().node_) {}

WeightExpr WeightExpr::constant(const Degree& d) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = d;
  return WeightExpr(std::move(n));
}

WeightExpr WeightExpr::memb(std::string fn, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Memb;
  n->name = std::move(fn);
  n->arg = std::move(arg);
  return WeightExpr(std::move(n));
}

WeightExpr WeightExpr::charneg(Literal lit) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::CharNeg;
  n->literal = std::move(lit);
  return WeightExpr(std::move(n));
}

namespace {

void gather(const WeightExpr& w, WeightExpr::Kind kind, std::vector<WeightExpr>& out) {
  if (w.kind() == kind) {
    gather(w.lhs(), kind, out);
    gather(w.rhs(), kind, out);
  } else {
    out.push_back(w);
  }
}

}  // namespace

// Flattens nested Min (Max) nodes into one sorted, duplicate-free operand list
// with at most one leading constant, rebuilt right-nested.
WeightExpr WeightExpr::combine(Kind kind, const WeightExpr& a, const WeightExpr& b) {
  bool is_min = kind == Kind::Min;
  std::vector<WeightExpr> ops;
  gather(a, kind, ops);
  gather(b, kind, ops);
  std::optional<Degree> bound;
  std::vector<WeightExpr> rest;
  for (auto& w : ops) {
    if (!w.is_const())
      rest.push_back(std::move(w));
    else if (!bound)
      bound = w.value();
    else
      bound = is_min ? posres::min(*bound, w.value()) : posres::max(*bound, w.value());
  }
  if (bound && (is_min ? bound->is_zero() : bound->is_one())) return constant(*bound);
  if (bound && (is_min ? bound->is_one() : bound->is_zero())) bound.reset();
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  if (bound) rest.insert(rest.begin(), constant(*bound));
  if (rest.empty()) return constant(is_min ? Degree::one() : Degree::zero());
  WeightExpr acc = rest.back();
  for (std::size_t i = rest.size() - 1; i-- > 0;) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->kids = {rest[i], acc};
    acc = WeightExpr(std::move(n));
  }
  return acc;
}

WeightExpr WeightExpr::min(const WeightExpr& a, const WeightExpr& b) {
  return combine(Kind::Min, a, b);
}

WeightExpr WeightExpr::max(const WeightExpr& a, const WeightExpr& b) {
  return combine(Kind::Max, a, b);
}

WeightExpr WeightExpr::gate(const WeightExpr& necessity, const WeightExpr& possibility) {
  if (necessity.is_const() && possibility.is_const())
    return constant(combine_npi(necessity.value(), possibility.value()));
  if (possibility.is_const() && possibility.value().is_zero()) return possibility;
  if (necessity.is_const() && necessity.value().is_zero()) return zero_weight();
  // a = 1 passes every b > 0 through, and b = 0 gives 0 either way.
  if (necessity.is_const() && necessity.value().is_one()) return possibility;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gate;
  n->kids = {necessity, possibility};
  return WeightExpr(std::move(n));
}

WeightExpr WeightExpr::sup(std::string var, std::string domain, const WeightExpr& body) {
  if (!body.has_free_variable(var)) return body;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sup;
  n->name = std::move(var);
  n->domain = std::move(domain);
  n->kids = {body};
  return WeightExpr(std::move(n));
}

WeightExpr::Kind WeightExpr::kind() const { return node_->kind; }
const Degree& WeightExpr::value() const { return node_->value; }
const std::string& WeightExpr::name() const { return node_->name; }
const std::string& WeightExpr::domain() const { return node_->domain; }
const Term& WeightExpr::arg() const { return node_->arg; }
const Literal& WeightExpr::literal() const { return node_->literal; }
const WeightExpr& WeightExpr::lhs() const { return node_->kids.at(0); }
const WeightExpr& WeightExpr::rhs() const { return node_->kids.at(1); }
const WeightExpr& WeightExpr::body() const { return node_->kids.at(0); }

std::set<std::string> WeightExpr::free_variables() const {
  std::set<std::string> out;
  switch (kind()) {
    case Kind::Const:
      break;
    case Kind::Memb:
      arg().collect_variables(out);
      break;
    case Kind::CharNeg:
      for (const auto& t : literal().atom.args) t.collect_variables(out);
      break;
    case Kind::Min:
    case Kind::Max:
    case Kind::Gate:
      for (const auto& k : node_->kids) {
        auto sub = k.free_variables();
        out.insert(sub.begin(), sub.end());
      }
      break;
    case Kind::Sup:
      out = body().free_variables();
      out.erase(name());
      break;
  }
  return out;
}

bool WeightExpr::has_free_variable(const std::string& v) const {
  switch (kind()) {
    case Kind::Const:
      return false;
    case Kind::Memb:
      return arg().contains_variable(v);
    case Kind::CharNeg:
      return std::any_of(literal().atom.args.begin(), literal().atom.args.end(),
                         [&](const Term& t) { return t.contains_variable(v); });
    case Kind::Min:
    case Kind::Max:
    case Kind::Gate:
      return lhs().has_free_variable(v) || rhs().has_free_variable(v);
    case Kind::Sup:
      return name() != v && body().has_free_variable(v);
  }
  return false;
}

bool WeightExpr::contains_charneg() const {
  if (kind() == Kind::CharNeg) return true;
  return std::any_of(node_->kids.begin(), node_->kids.end(),
                     [](const WeightExpr& k) { return k.contains_charneg(); });
}

WeightExpr WeightExpr::substitute(const Substitution& s) const {
  if (s.empty()) return *this;
  switch (kind()) {
    case Kind::Const:
      return *this;
    case Kind::Memb:
      return memb(name(), s.apply(arg()));
    case Kind::CharNeg:
      return charneg(s.apply(literal()));
    case Kind::Min:
      return min(lhs().substitute(s), rhs().substitute(s));
    case Kind::Max:
      return max(lhs().substitute(s), rhs().substitute(s));
    case Kind::Gate:
      return gate(lhs().substitute(s), rhs().substitute(s));
    case Kind::Sup: {
      Substitution inner;
      for (const auto& [v, t] : s.bindings())
        if (v != name()) inner.set(v, t);
      std::string bound = name();
      WeightExpr b = body();
      auto captured = inner.range_variables();
      if (captured.count(bound)) {
        std::set<std::string> taken = b.free_variables();
        taken.insert(captured.begin(), captured.end());
        for (const auto& [v, t] : inner.bindings()) taken.insert(v);
        std::string base = variable_base(bound);
        for (int k = 1;; ++k) {
          std::string candidate = base + "_" + std::to_string(k);
          if (!taken.count(candidate)) {
            bound = candidate;
            break;
          }
        }
        Substitution rename;
        rename.set(name(), Term::variable(bound));
        b = b.substitute(rename);
      }
      return sup(bound, domain(), b.substitute(inner));
    }
  }
  return *this;
}

std::string WeightExpr::to_string() const {
  switch (kind()) {
    case Kind::Const:
      return value().to_string();
    case Kind::Memb:
      return "mu(" + name() + "," + arg().to_string() + ")";
    case Kind::CharNeg:
      return "charneg(" + literal().to_string() + ")";
    case Kind::Min:
      return "min(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Kind::Max:
      return "max(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Kind::Gate:
      return "npi(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Kind::Sup:
      return "sup(" + name() + ":" + domain() + "," + body().to_string() + ")";
  }
  return {};
}

bool operator==(const WeightExpr& a, const WeightExpr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const WeightExpr& a, const WeightExpr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case WeightExpr::Kind::Const:
      return x.value <=> y.value;
    case WeightExpr::Kind::Memb:
      if (auto c = x.name <=> y.name; c != 0) return c;
      return x.arg <=> y.arg;
    case WeightExpr::Kind::CharNeg:
      return x.literal <=> y.literal;
    case WeightExpr::Kind::Sup:
      if (auto c = x.name <=> y.name; c != 0) return c;
      if (auto c = x.domain <=> y.domain; c != 0) return c;
      break;
    default:
      break;
  }
  return std::lexicographical_compare_three_way(x.kids.begin(), x.kids.end(), y.kids.begin(),
                                                y.kids.end());
}

FuzzyDef FuzzyDef::linear(std::string name, std::vector<std::pair<Rational, Degree>> points) {
  if (points.size() < 2) throw Error("fuzzy set '" + name + "' needs at least two breakpoints");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1].first < points[i].first))
      throw Error("fuzzy set '" + name + "': breakpoints must be strictly increasing");
  FuzzyDef f;
  f.name_ = std::move(name);
  f.shape_ = Shape::Linear;
  f.points_ = std::move(points);
  return f;
}

FuzzyDef FuzzyDef::table(std::string name, std::map<Term, Degree> entries) {
  for (const auto& [t, d] : entries)
    if (!t.is_ground()) throw Error("fuzzy set '" + name + "': table keys must be ground");
  FuzzyDef f;
  f.name_ = std::move(name);
  f.shape_ = Shape::Table;
  f.entries_ = std::move(entries);
  return f;
}

Degree FuzzyDef::eval(const Term& arg) const {
  if (shape_ == Shape::Table) {
    auto it = entries_.find(arg);
    return it == entries_.end() ? Degree::zero() : it->second;
  }
  if (!arg.is_numeric()) return Degree::zero();
  return eval_at(parse_rational(arg.name()));
}

Degree FuzzyDef::eval_at(const Rational& x) const {
  if (shape_ != Shape::Linear) throw Error("fuzzy set '" + name_ + "' is not piecewise-linear");
  if (!(points_.front().first < x)) return points_.front().second;
  if (!(x < points_.back().first)) return points_.back().second;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& [x1, y1] = points_[i - 1];
    const auto& [x2, y2] = points_[i];
    if (!(x2 < x)) {
      Rational t = (x - x1) / (x2 - x1);
      return Degree(y1.value() + t * (y2.value() - y1.value()));
    }
  }
  return points_.back().second;
}

Degree FuzzyDef::max_value() const {
  Degree best = Degree::zero();
  for (const auto& [x, y] : points_) best = posres::max(best, y);
  for (const auto& [t, d] : entries_) best = posres::max(best, d);
  return best;
}

Degree FuzzyDef::min_value() const {
  // Table sets are 0 outside their listed support.
  if (shape_ == Shape::Table) return Degree::zero();
  Degree best = Degree::one();
  for (const auto& [x, y] : points_) best = posres::min(best, y);
  return best;
}

std::string FuzzyDef::to_string() const {
  std::string out = "fuzzy " + name_;
  if (shape_ == Shape::Linear) {
    out += " linear";
    for (const auto& [x, y] : points_) out += " (" + format_rational(x) + ", " + y.to_string() + ")";
  } else {
    out += " table {";
    bool first = true;
    for (const auto& [t, d] : entries_) {
      out += first ? " " : ", ";
      first = false;
      out += t.to_string() + ": " + d.to_string();
    }
    out += " }";
  }
  return out;
}

DomainDecl DomainDecl::finite(std::string name, std::vector<Term> elements) {
  for (const auto& e : elements)
    if (!e.is_ground()) throw Error("domain '" + name + "': elements must be ground");
  DomainDecl d;
  d.name_ = std::move(name);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  d.elements_ = std::move(elements);
  return d;
}

DomainDecl DomainDecl::interval(std::string name, Rational lo, Rational hi) {
  if (hi < lo) throw Error("domain '" + name + "': empty range");
  DomainDecl d;
  d.name_ = std::move(name);
  d.interval_ = true;
  d.lo_ = std::move(lo);
  d.hi_ = std::move(hi);
  return d;
}

std::string DomainDecl::to_string() const {
  if (interval_) return "domain " + name_ + " range " + format_rational(lo_) + " " + format_rational(hi_);
  std::string out = "domain " + name_ + " {";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    out += i ? ", " : " ";
    out += elements_[i].to_string();
  }
  return out + " }";
}

}  // namespace posres
