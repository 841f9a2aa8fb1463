#include "posres/kb.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace posres {

std::string Valuation::to_string() const {
  return std::string(kind == Measure::Necessity ? "N " : "P ") + weight.to_string();
}

void KnowledgeBase::add_fuzzy(FuzzyDef f) {
  std::string name = f.name();
  if (fuzzy_.count(name)) throw Error("fuzzy set '" + name + "' declared twice");
  fuzzy_.emplace(std::move(name), std::move(f));
}

void KnowledgeBase::add_domain(DomainDecl d) {
  std::string name = d.name();
  if (domains_.count(name)) throw Error("domain '" + name + "' declared twice");
  domains_.emplace(std::move(name), std::move(d));
}

const FuzzyDef* KnowledgeBase::fuzzy(const std::string& name) const {
  auto it = fuzzy_.find(name);
  return it == fuzzy_.end() ? nullptr : &it->second;
}

DomainDecl KnowledgeBase::resolve_domain(const std::string& name) const {
  if (auto it = domains_.find(name); it != domains_.end()) return it->second;
  if (name == kUniverseDomain) return DomainDecl::finite(kUniverseDomain, universe());
  throw Error("undeclared domain '" + name + "'");
}

std::string KnowledgeBase::domain_for_variable(const std::string& var) const {
  std::string base = variable_base(var);
  for (auto& c : base) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return domains_.count(base) ? base : std::string(kUniverseDomain);
}

std::vector<Term> KnowledgeBase::universe() const {
  std::set<Term> out;
  auto visit = [&](const Term& t, auto&& self) -> void {
    if (t.is_constant()) out.insert(t);
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& wc : clauses_)
    for (const auto& l : wc.clause)
      for (const auto& a : l.atom.args) visit(a, visit);
  return {out.begin(), out.end()};
}

std::string KnowledgeBase::display_label(std::size_t i) const {
  const auto& c = clauses_.at(i);
  return c.label ? *c.label : "#" + std::to_string(i + 1);
}

namespace {

class ArityChecker {
 public:
  void predicate(const Atom& a) { check(predicates_, a.predicate, a.args.size(), "predicate"); for (const auto& t : a.args) term(t); }
  void term(const Term& t) {
    if (t.is_compound()) check(functors_, t.name(), t.args().size(), "function symbol");
    for (const auto& a : t.args()) term(a);
  }

 private:
  static void check(std::map<std::string, std::size_t>& seen, const std::string& name,
                    std::size_t arity, const char* what) {
    auto [it, fresh] = seen.emplace(name, arity);
    if (!fresh && it->second != arity)
      throw Error(std::string("arity clash: ") + what + " '" + name + "' used with " +
                  std::to_string(it->second) + " and " + std::to_string(arity) + " arguments");
  }
  std::map<std::string, std::size_t> predicates_;
  std::map<std::string, std::size_t> functors_;
};

void check_weight_refs(const WeightExpr& w, const KnowledgeBase& kb, ArityChecker& arity) {
  switch (w.kind()) {
    case WeightExpr::Kind::Const:
      return;
    case WeightExpr::Kind::Memb:
      if (!kb.fuzzy(w.name())) throw Error("undeclared fuzzy set '" + w.name() + "'");
      arity.term(w.arg());
      return;
    case WeightExpr::Kind::CharNeg:
      arity.predicate(w.literal().atom);
      return;
    case WeightExpr::Kind::Sup:
      kb.resolve_domain(w.domain());
      check_weight_refs(w.body(), kb, arity);
      return;
    default:
      check_weight_refs(w.lhs(), kb, arity);
      check_weight_refs(w.rhs(), kb, arity);
  }
}

}  // namespace

void KnowledgeBase::validate() const {
  std::set<std::string> labels;
  ArityChecker arity;
  for (const auto& wc : clauses_) {
    if (wc.label && !labels.insert(*wc.label).second)
      throw Error("duplicate clause label '" + *wc.label + "'");
    for (const auto& l : wc.clause) arity.predicate(l.atom);
    check_weight_refs(wc.valuation.weight, *this, arity);
  }
}

KnowledgeBase KnowledgeBase::with_clauses(const std::vector<WeightedClause>& extra) const {
  KnowledgeBase out = *this;
  out.clauses_.insert(out.clauses_.end(), extra.begin(), extra.end());
  return out;
}

KnowledgeBase KnowledgeBase::with_clauses_only(std::vector<WeightedClause> clauses) const {
  KnowledgeBase out = *this;
  out.clauses_ = std::move(clauses);
  return out;
}

bool KnowledgeBase::is_necessity_only() const {
  return std::all_of(clauses_.begin(), clauses_.end(), [](const WeightedClause& c) {
    return c.valuation.kind == Measure::Necessity;
  });
}

bool KnowledgeBase::has_ground_weights() const {
  return std::all_of(clauses_.begin(), clauses_.end(),
                     [](const WeightedClause& c) { return c.valuation.is_ground(); });
}

std::strong_ordering valuation_cmp(Measure ka, const Degree& a, Measure kb, const Degree& b) {
  // Rank 2: (N b>0); rank 1: the (N 0) ~ (P 1) boundary; rank 0: (P a<1).
  auto rank = [](Measure k, const Degree& d) {
    if (k == Measure::Necessity) return d.is_zero() ? 1 : 2;
    return d.is_one() ? 1 : 0;
  };
  int ra = rank(ka, a), rb = rank(kb, b);
  if (ra != rb) return ra <=> rb;
  if (ra == 1) return std::strong_ordering::equal;
  return a <=> b;
}

std::strong_ordering valuation_cmp(const Valuation& a, const Valuation& b) {
  if (!a.is_ground() || !b.is_ground()) throw Error("unresolved weight variable");
  return valuation_cmp(a.kind, a.weight.value(), b.kind, b.weight.value());
}

namespace {

// Weight over an interval variable reduced to constants and linear fuzzy sets.
struct Univariate {
  enum class Kind { Const, Linear, Min, Max } kind = Kind::Const;
  Degree value;
  const FuzzyDef* fn = nullptr;
  std::vector<Univariate> kids;

  Degree at(const Rational& x) const {
    switch (kind) {
      case Kind::Const: return value;
      case Kind::Linear: return fn->eval_at(x);
      case Kind::Min: return min(kids[0].at(x), kids[1].at(x));
      case Kind::Max: return max(kids[0].at(x), kids[1].at(x));
    }
    return value;
  }
  void leaves(std::vector<const Univariate*>& out) const {
    if (kind == Kind::Const || kind == Kind::Linear) out.push_back(this);
    for (const auto& k : kids) k.leaves(out);
  }
};

class Evaluator {
 public:
  Evaluator(const KnowledgeBase& kb, const Assignment* hyp, bool strict)
      : kb_(kb), hyp_(hyp), strict_(strict) {}

  std::optional<Degree> eval(const WeightExpr& w, const Substitution& b) const {
    switch (w.kind()) {
      case WeightExpr::Kind::Const:
        return w.value();
      case WeightExpr::Kind::Memb: {
        const FuzzyDef* f = kb_.fuzzy(w.name());
        if (!f) throw Error("undeclared fuzzy set '" + w.name() + "'");
        Term arg = b.apply(w.arg());
        if (!arg.is_ground()) return fail("unbound variable in " + w.to_string());
        return f->eval(arg);
      }
      case WeightExpr::Kind::CharNeg: {
        Literal lit = b.apply(w.literal());
        if (!lit.is_ground()) return fail("unbound variable in " + w.to_string());
        if (!hyp_) return fail("hypothesis atom " + lit.atom.to_string() + " unassigned");
        auto it = hyp_->find(lit.atom);
        if (it == hyp_->end()) return fail("hypothesis atom " + lit.atom.to_string() + " unassigned");
        bool literal_true = it->second == lit.positive;
        return literal_true ? Degree::zero() : Degree::one();
      }
      case WeightExpr::Kind::Min: {
        auto a = eval(w.lhs(), b);
        if (!a) return a;
        if (a->is_zero()) return a;
        auto c = eval(w.rhs(), b);
        if (!c) return c;
        return min(*a, *c);
      }
      case WeightExpr::Kind::Max: {
        auto a = eval(w.lhs(), b);
        if (!a) return a;
        auto c = eval(w.rhs(), b);
        if (!c) return c;
        return max(*a, *c);
      }
      case WeightExpr::Kind::Gate: {
        auto a = eval(w.lhs(), b);
        if (!a) return a;
        auto c = eval(w.rhs(), b);
        if (!c) return c;
        return combine_npi(*a, *c);
      }
      case WeightExpr::Kind::Sup:
        return sup(w.body(), w.name(), kb_.resolve_domain(w.domain()), b);
    }
    return std::nullopt;
  }

  std::optional<Degree> sup(const WeightExpr& body, const std::string& var,
                            const DomainDecl& domain, const Substitution& binding) const {
    Substitution inner;
    for (const auto& [v, t] : binding.bindings())
      if (v != var) inner.set(v, t);
    if (!domain.is_interval()) {
      Degree best = Degree::zero();
      for (const auto& e : domain.elements()) {
        Substitution b = inner;
        b.set(var, e);
        auto v = eval(body, b);
        if (!v) return v;
        best = max(best, *v);
        if (best.is_one()) break;
      }
      return best;
    }
    auto prepared = prepare(body, var, inner);
    if (!prepared) return std::nullopt;
    return interval_max(*prepared, domain);
  }

 private:
  std::optional<Degree> fail(const std::string& why) const {
    if (strict_) throw Error(why);
    return std::nullopt;
  }

  std::optional<Univariate> prepare(const WeightExpr& w, const std::string& var,
                                    const Substitution& inner) const {
    Univariate u;
    if (!w.has_free_variable(var)) {
      auto v = eval(w, inner);
      if (!v) return std::nullopt;
      u.value = *v;
      return u;
    }
    switch (w.kind()) {
      case WeightExpr::Kind::Memb: {
        const FuzzyDef* f = kb_.fuzzy(w.name());
        if (!f) throw Error("undeclared fuzzy set '" + w.name() + "'");
        if (!w.arg().is_variable() || f->shape() != FuzzyDef::Shape::Linear)
          throw Error("sup over a range needs a piecewise-linear fuzzy set applied to " + var +
                      " in " + w.to_string());
        u.kind = Univariate::Kind::Linear;
        u.fn = f;
        return u;
      }
      case WeightExpr::Kind::Min:
      case WeightExpr::Kind::Max: {
        auto a = prepare(w.lhs(), var, inner);
        if (!a) return a;
        auto b = prepare(w.rhs(), var, inner);
        if (!b) return b;
        u.kind = w.kind() == WeightExpr::Kind::Min ? Univariate::Kind::Min : Univariate::Kind::Max;
        u.kids = {std::move(*a), std::move(*b)};
        return u;
      }
      default:
        throw Error("unsupported weight under sup over a range: " + w.to_string());
    }
  }

  static Degree interval_max(const Univariate& u, const DomainDecl& d) {
    std::vector<const Univariate*> leaves;
    u.leaves(leaves);
    std::vector<Rational> points{d.lo(), d.hi()};
    for (const auto* leaf : leaves)
      if (leaf->kind == Univariate::Kind::Linear)
        for (const auto& [x, y] : leaf->fn->points())
          if (d.lo() < x && x < d.hi()) points.push_back(x);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Between consecutive breakpoints every leaf is linear, so the min/max
    // tree can only peak where two leaves cross.
    std::vector<Rational> candidates = points;
    for (std::size_t k = 1; k < points.size(); ++k) {
      const Rational& p = points[k - 1];
      const Rational& q = points[k];
      for (std::size_t i = 0; i < leaves.size(); ++i)
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
          Rational dp = leaves[i]->at(p).value() - leaves[j]->at(p).value();
          Rational dq = leaves[i]->at(q).value() - leaves[j]->at(q).value();
          if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0))
            candidates.push_back(p + (q - p) * dp / (dp - dq));
        }
    }
    Degree best = Degree::zero();
    for (const auto& x : candidates) best = max(best, u.at(x));
    return best;
  }

  const KnowledgeBase& kb_;
  const Assignment* hyp_;
  bool strict_;
};

}  // namespace

Degree weight_eval(const WeightExpr& w, const Substitution& binding, const KnowledgeBase& kb,
                   const Assignment* hyp) {
  return *Evaluator(kb, hyp, true).eval(w, binding);
}

std::optional<Degree> try_weight_eval(const WeightExpr& w, const Substitution& binding,
                                      const KnowledgeBase& kb, const Assignment* hyp) {
  return Evaluator(kb, hyp, false).eval(w, binding);
}

Degree sup_over_domain(const WeightExpr& body, const std::string& var, const DomainDecl& domain,
                       const Substitution& binding, const KnowledgeBase& kb,
                       const Assignment* hyp) {
  return *Evaluator(kb, hyp, true).sup(body, var, domain, binding);
}

WeightExpr fold_weight(const WeightExpr& w, const KnowledgeBase& kb, const Assignment* hyp) {
  switch (w.kind()) {
    case WeightExpr::Kind::Const:
      return w;
    case WeightExpr::Kind::Memb:
    case WeightExpr::Kind::CharNeg:
      if (auto v = try_weight_eval(w, {}, kb, hyp)) return WeightExpr::constant(*v);
      return w;
    case WeightExpr::Kind::Min:
      return WeightExpr::min(fold_weight(w.lhs(), kb, hyp), fold_weight(w.rhs(), kb, hyp));
    case WeightExpr::Kind::Max:
      return WeightExpr::max(fold_weight(w.lhs(), kb, hyp), fold_weight(w.rhs(), kb, hyp));
    case WeightExpr::Kind::Gate:
      return WeightExpr::gate(fold_weight(w.lhs(), kb, hyp), fold_weight(w.rhs(), kb, hyp));
    case WeightExpr::Kind::Sup: {
      WeightExpr s = WeightExpr::sup(w.name(), w.domain(), fold_weight(w.body(), kb, hyp));
      if (s.kind() == WeightExpr::Kind::Sup && s.free_variables().empty())
        if (auto v = try_weight_eval(s, {}, kb, hyp)) return WeightExpr::constant(*v);
      return s;
    }
  }
  return w;
}

namespace {

Degree bound(const WeightExpr& w, const KnowledgeBase& kb, bool upper) {
  switch (w.kind()) {
    case WeightExpr::Kind::Const:
      return w.value();
    case WeightExpr::Kind::Memb: {
      const FuzzyDef* f = kb.fuzzy(w.name());
      if (!f) throw Error("undeclared fuzzy set '" + w.name() + "'");
      if (w.arg().is_ground()) return f->eval(w.arg());
      return upper ? f->max_value() : f->min_value();
    }
    case WeightExpr::Kind::CharNeg:
      return upper ? Degree::one() : Degree::zero();
    case WeightExpr::Kind::Min:
      return min(bound(w.lhs(), kb, upper), bound(w.rhs(), kb, upper));
    case WeightExpr::Kind::Max:
      return max(bound(w.lhs(), kb, upper), bound(w.rhs(), kb, upper));
    case WeightExpr::Kind::Gate:
      return combine_npi(bound(w.lhs(), kb, upper), bound(w.rhs(), kb, upper));
    case WeightExpr::Kind::Sup:
      if (w.free_variables().empty())
        if (auto v = try_weight_eval(w, {}, kb)) return *v;
      // An empty domain makes the sup 0.
      return upper ? bound(w.body(), kb, true) : Degree::zero();
  }
  return Degree::zero();
}

}  // namespace

Degree weight_upper_bound(const WeightExpr& w, const KnowledgeBase& kb) {
  return bound(w, kb, true);
}

Degree weight_lower_bound(const WeightExpr& w, const KnowledgeBase& kb) {
  return bound(w, kb, false);
}

}  // namespace posres
