#include "posres/engine.hpp"

#include <algorithm>
#include <set>

#include "posres/prover.hpp"
#include "posres/unify.hpp"
#include "resolve.hpp"

namespace posres {

namespace detail {

namespace {

std::set<std::string> literal_variables(const std::vector<Literal>& lits) {
  std::set<std::string> out;
  for (const auto& l : lits)
    for (const auto& a : l.atom.args) a.collect_variables(out);
  return out;
}

}  // namespace

std::optional<Inference> resolve(const WeightedClause& c1, const WeightedClause& c2,
                                 std::size_t i, std::size_t j, const KnowledgeBase& kb) {
  const auto& l1 = c1.clause.literals().at(i);
  const auto& l2 = c2.clause.literals().at(j);
  if (l1.positive == l2.positive) return std::nullopt;
  Measure k1 = c1.valuation.kind, k2 = c2.valuation.kind;
  if (k1 == Measure::Possibility && k2 == Measure::Possibility) return std::nullopt;
  auto theta = mgu(l1.atom, l2.atom);
  if (!theta) return std::nullopt;

  std::vector<Literal> lits, all;
  for (std::size_t k = 0; k < c1.clause.size(); ++k) {
    Literal l = theta->apply(c1.clause.literals()[k]);
    if (k != i) lits.push_back(l);
    all.push_back(std::move(l));
  }
  for (std::size_t k = 0; k < c2.clause.size(); ++k) {
    Literal l = theta->apply(c2.clause.literals()[k]);
    if (k != j) lits.push_back(l);
    all.push_back(std::move(l));
  }

  WeightExpr w1 = c1.valuation.weight.substitute(*theta);
  WeightExpr w2 = c2.valuation.weight.substitute(*theta);
  Inference out;
  if (k1 == Measure::Necessity && k2 == Measure::Necessity) {
    out.clause.valuation = {Measure::Necessity, fold_weight(WeightExpr::min(w1, w2), kb)};
  } else {
    const WeightExpr& wn = k1 == Measure::Necessity ? w1 : w2;
    const WeightExpr& wp = k1 == Measure::Necessity ? w2 : w1;
    out.clause.valuation = {Measure::Possibility, fold_weight(WeightExpr::gate(wn, wp), kb)};
  }
  out.clause.clause = Clause(std::move(lits));
  out.theta = std::move(*theta);

  auto before = literal_variables(all);
  auto after = out.clause.clause.variables();
  std::set<std::string> parent_vars = literal_variables(c1.clause.literals());
  for (const auto& v : literal_variables(c2.clause.literals())) parent_vars.insert(v);
  for (const auto& v : out.clause.valuation.weight.free_variables()) {
    if (!before.count(v) || after.count(v)) continue;
    // A variable unified with one that has a declared domain ranges over it.
    std::string domain = kb.domain_for_variable(v);
    for (const auto& u : parent_vars) {
      if (domain != kUniverseDomain) break;
      if (out.theta.apply(Term::variable(u)) == Term::variable(v))
        domain = kb.domain_for_variable(u);
    }
    out.eliminated.emplace_back(v, domain);
  }
  return out;
}

std::vector<Inference> factors(const WeightedClause& c, const KnowledgeBase& kb) {
  std::vector<Inference> out;
  const auto& lits = c.clause.literals();
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[i].positive != lits[j].positive) continue;
      auto theta = mgu(lits[i].atom, lits[j].atom);
      if (!theta) continue;
      Inference f;
      f.clause = apply_subst(c, *theta);
      f.clause.label.reset();
      f.clause.valuation.weight = fold_weight(f.clause.valuation.weight, kb);
      f.theta = std::move(*theta);
      out.push_back(std::move(f));
    }
  return out;
}

WeightExpr eliminate_all(const WeightExpr& w,
                         const std::vector<std::pair<std::string, std::string>>& vars,
                         const KnowledgeBase& kb) {
  WeightExpr out = w;
  for (const auto& [v, domain] : vars) out = eliminate_weight_var(out, v, domain, kb);
  return out;
}

bool provably_geq(const Valuation& a, const Valuation& b, const KnowledgeBase& kb) {
  if (a.kind == b.kind && a.weight == b.weight) return true;
  Degree lo = weight_lower_bound(a.weight, kb);
  Degree hi = weight_upper_bound(b.weight, kb);
  return valuation_cmp(a.kind, lo, b.kind, hi) >= 0;
}

namespace {

bool subsume_from(const std::vector<Literal>& pat, std::size_t k, const Clause& target,
                  Substitution& s) {
  if (k == pat.size()) return true;
  for (const auto& t : target) {
    if (t.positive != pat[k].positive) continue;
    Substitution trial = s;
    if (match(pat[k].atom, t.atom, trial) && subsume_from(pat, k + 1, target, trial)) {
      s = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

bool clause_subsumes(const Clause& c1, const Clause& c2, Substitution& s) {
  if (c1.size() > c2.size()) return false;
  return subsume_from(c1.literals(), 0, c2, s);
}

}  // namespace detail

namespace {

WeightedClause finish(detail::Inference inf, const KnowledgeBase& kb) {
  WeightedClause c = std::move(inf.clause);
  c.valuation.weight = fold_weight(detail::eliminate_all(c.valuation.weight, inf.eliminated, kb), kb);
  return c;
}

}  // namespace

std::optional<WeightedClause> resolve_nn(const WeightedClause& c1, const WeightedClause& c2,
                                         std::size_t lit1, std::size_t lit2,
                                         const KnowledgeBase& kb) {
  if (c1.valuation.kind != Measure::Necessity || c2.valuation.kind != Measure::Necessity)
    throw Error("resolve_nn needs two necessity-valued clauses");
  auto inf = detail::resolve(c1, c2, lit1, lit2, kb);
  if (!inf) return std::nullopt;
  return finish(std::move(*inf), kb);
}

std::optional<WeightedClause> resolve_npi(const WeightedClause& cn, const WeightedClause& cpi,
                                          std::size_t lit1, std::size_t lit2,
                                          const KnowledgeBase& kb) {
  if (cn.valuation.kind != Measure::Necessity || cpi.valuation.kind != Measure::Possibility)
    throw Error("resolve_npi needs a necessity-valued and a possibility-valued clause");
  auto inf = detail::resolve(cn, cpi, lit1, lit2, kb);
  if (!inf) return std::nullopt;
  return finish(std::move(*inf), kb);
}

bool subsumes(const WeightedClause& c1, const WeightedClause& c2, const KnowledgeBase& kb) {
  // Rename c1 apart so that its variables never collide with the rigid ones of c2.
  WeightedClause a = rename_apart(c1, 0);
  Substitution s;
  if (!detail::clause_subsumes(a.clause, c2.clause, s)) return false;
  try {
    Valuation inst{a.valuation.kind, fold_weight(a.valuation.weight.substitute(s), kb)};
    return detail::provably_geq(inst, c2.valuation, kb);
  } catch (const Error&) {
    return false;
  }
}

WeightExpr eliminate_weight_var(const WeightExpr& w, const std::string& var,
                                const std::string& domain, const KnowledgeBase& kb) {
  if (!w.has_free_variable(var)) return w;
  DomainDecl d = kb.resolve_domain(domain);
  if (!d.is_interval()) {
    WeightExpr acc = WeightExpr::constant(Degree::zero());
    for (const auto& e : d.elements()) {
      Substitution s;
      s.set(var, e);
      acc = WeightExpr::max(acc, fold_weight(w.substitute(s), kb));
    }
    return acc;
  }
  WeightExpr s = WeightExpr::sup(var, domain, w);
  if (s.free_variables().empty() && !s.contains_charneg())
    return WeightExpr::constant(sup_over_domain(w, var, d, {}, kb));
  return s;
}

CutOutcome saturate_alpha_cut(const KnowledgeBase& kb, const Degree& alpha,
                              const SearchConfig& cfg) {
  std::vector<WeightedClause> cut;
  for (std::size_t i = 0; i < kb.clauses().size(); ++i) {
    const auto& c = kb.clauses()[i];
    if (c.valuation.kind != Measure::Necessity || !c.valuation.is_ground())
      throw Error("alpha cuts need a necessity-only base with constant weights");
    if (c.valuation.weight.value() >= alpha && !c.valuation.weight.value().is_zero()) {
      cut.push_back(c);
      cut.back().label = kb.display_label(i);
    }
  }
  SaturationOptions opt;
  opt.order = SaturationOptions::Order::BySize;
  opt.max_steps = cfg.max_steps;
  opt.max_depth = cfg.max_depth;
  opt.classical = true;
  SaturationResult r = saturate(kb, cut, opt);
  CutOutcome out;
  if (!r.empties.empty()) {
    out.result = CutResult::Refuted;
    out.trace = extract_trace(r, r.empties.front(), SearchStatus::Optimal);
  } else {
    out.result = r.incomplete ? CutResult::Unknown : CutResult::Consistent;
  }
  return out;
}

namespace {

bool cut_applicable(const KnowledgeBase& kb) {
  return kb.is_necessity_only() && kb.has_ground_weights();
}

RefutationResult refute_by_cuts(const KnowledgeBase& kb, const SearchConfig& cfg) {
  RefutationResult out;
  out.engine = SearchConfig::Engine::AlphaCut;
  std::set<Degree, std::greater<>> weights;
  for (const auto& c : kb.clauses())
    if (!c.valuation.weight.value().is_zero()) weights.insert(c.valuation.weight.value());
  bool unknown = false;
  for (const auto& alpha : weights) {
    CutOutcome cut = saturate_alpha_cut(kb, alpha, cfg);
    if (cut.result == CutResult::Unknown) {
      unknown = true;
      continue;
    }
    if (cut.result == CutResult::Refuted) {
      out.status = unknown ? SearchStatus::Incomplete : SearchStatus::Optimal;
      cut.trace->status = out.status;
      out.best = cut.trace->final;
      out.trace = cut.trace;
      out.all.push_back(*cut.trace);
      return out;
    }
  }
  out.status = unknown ? SearchStatus::Incomplete : SearchStatus::Optimal;
  return out;
}

RefutationResult refute_best_first(const KnowledgeBase& kb, const SearchConfig& cfg) {
  std::vector<WeightedClause> inputs;
  for (std::size_t i = 0; i < kb.clauses().size(); ++i) {
    inputs.push_back(kb.clauses()[i]);
    inputs.back().label = kb.display_label(i);
  }
  SaturationOptions opt;
  opt.order = SaturationOptions::Order::ByValuation;
  opt.max_steps = cfg.max_steps;
  opt.max_depth = cfg.max_depth;
  opt.collect_all = cfg.collect_all_refutations;
  SaturationResult r = saturate(kb, inputs, opt);

  RefutationResult out;
  out.engine = SearchConfig::Engine::BestFirst;
  out.status = r.incomplete ? SearchStatus::Incomplete : SearchStatus::Unverified;
  std::vector<ProofTrace> traces;
  for (std::size_t e : r.empties) traces.push_back(extract_trace(r, e, out.status));
  auto key = [&](const ProofTrace& t) {
    return std::pair{t.final.kind, weight_upper_bound(t.final.weight, kb)};
  };
  std::stable_sort(traces.begin(), traces.end(), [&](const ProofTrace& a, const ProofTrace& b) {
    auto [ka, da] = key(a);
    auto [kb2, db] = key(b);
    auto c = valuation_cmp(ka, da, kb2, db);
    if (c != 0) return c > 0;
    return a.final.is_ground() && !b.final.is_ground();
  });
  for (const auto& t : traces)
    if (t.final.is_ground()) {
      out.best = t.final;
      out.trace = t;
      break;
    }
  if (!out.best && !traces.empty()) {
    out.best = traces.front().final;
    out.trace = traces.front();
  }
  out.all = std::move(traces);
  return out;
}

}  // namespace

RefutationResult refute(const KnowledgeBase& kb, const std::vector<WeightedClause>& assumptions,
                        const SearchConfig& cfg) {
  if (cfg.max_steps == 0 || cfg.max_depth == 0) throw Error("search limits must be positive");
  KnowledgeBase full = kb.with_clauses(assumptions);
  if (cfg.engine == SearchConfig::Engine::AlphaCut && !cfg.collect_all_refutations &&
      cut_applicable(full))
    return refute_by_cuts(full, cfg);
  return refute_best_first(full, cfg);
}

RefutationResult refute(const KnowledgeBase& kb, const Goal& goal, const SearchConfig& cfg) {
  return refute(kb, negate_goal(goal), cfg);
}

std::vector<WeightedClause> negate_goal(const Goal& goal) {
  if (goal.literals.empty()) throw Error("empty goal");
  std::vector<Literal> lits;
  for (const auto& l : goal.literals) lits.push_back(l.negated());
  return {WeightedClause{Clause(std::move(lits)), Valuation::necessity(Degree::one()), "goal"}};
}

std::vector<WeightedClause> negate_clause(const Clause& c) {
  std::vector<WeightedClause> out;
  for (const auto& l : c)
    out.push_back({Clause({l.negated()}), Valuation::necessity(Degree::one()), "goal"});
  return out;
}

}  // namespace posres
