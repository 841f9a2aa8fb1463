#include "posres/revision.hpp"

#include <algorithm>
#include <set>

namespace posres {

namespace {

Degree necessity_weight(const RefutationResult& r) {
  if (r.status == SearchStatus::Incomplete)
    throw SearchLimitError("search limit reached before the refutation search finished");
  if (!r.best || r.best->kind != Measure::Necessity) return Degree::zero();
  if (!r.best->is_ground()) throw Error("unresolved weight variable");
  return r.best->weight.value();
}

std::string render(const Literal& l) {
  return (l.positive ? "" : "¬") + l.atom.to_string();
}

}  // namespace

KnowledgeBase necessity_part(const KnowledgeBase& kb) {
  std::vector<WeightedClause> kept;
  for (std::size_t i = 0; i < kb.clauses().size(); ++i) {
    if (kb.clauses()[i].valuation.kind != Measure::Necessity) continue;
    kept.push_back(kb.clauses()[i]);
    kept.back().label = kb.display_label(i);
  }
  return kb.with_clauses_only(std::move(kept));
}

Degree inconsistency_degree(const KnowledgeBase& kb, IncRoute route, const SearchConfig& cfg) {
  KnowledgeBase n = necessity_part(kb);
  if (route == IncRoute::Semantic) return consistency_degree(ground_kb(n)).inc;
  SearchConfig c = cfg;
  c.collect_all_refutations = false;
  return necessity_weight(refute(n, std::vector<WeightedClause>{}, c));
}

QueryVerdict query(const KnowledgeBase& kb, const Goal& goal, const SearchConfig& cfg,
                   IncRoute route) {
  QueryVerdict v;
  RefutationResult r = refute(kb, goal, cfg);
  v.best = r.best;
  v.status = r.status;
  v.trace = r.trace;
  if (r.best && r.best->kind == Measure::Necessity && r.best->is_ground())
    v.beta = r.best->weight.value();
  if (r.trace)
    for (const auto& label : r.trace->input_labels())
      if (label != "goal") v.support.push_back(label);
  v.inc = inconsistency_degree(kb, route, cfg);
  v.valid = v.inc < v.beta;
  return v;
}

MinRelation check_min_relation(const KnowledgeBase& kb, const Goal& goal,
                               const SearchConfig& cfg) {
  KnowledgeBase n = necessity_part(kb);
  SearchConfig c = cfg;
  c.collect_all_refutations = false;
  Substitution sk;
  for (const auto& l : goal.literals)
    for (const auto& a : l.atom.args) {
      std::set<std::string> vars;
      a.collect_variables(vars);
      for (const auto& v : vars) sk.set(v, Term::constant("sk_" + v));
    }
  std::vector<WeightedClause> asserted;
  for (const auto& l : goal.literals)
    asserted.push_back({Clause({sk.apply(l)}), Valuation::necessity(Degree::one()), "goal"});

  MinRelation m;
  m.beta = necessity_weight(refute(n, negate_goal(goal), c));
  m.beta_prime = necessity_weight(refute(n, asserted, c));
  m.inc = necessity_weight(refute(n, std::vector<WeightedClause>{}, c));
  m.holds = min(m.beta, m.beta_prime) == m.inc;
  return m;
}

int compare_dropped(const std::vector<Degree>& a, const std::vector<Degree>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::string Extension::consequences_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < consequences.size(); ++i)
    out += (i ? ", " : "") + render(consequences[i]);
  return out + "}";
}

std::vector<Extension> preferred_extensions(const KnowledgeBase& kb, std::size_t cap) {
  KnowledgeBase n = necessity_part(kb);
  GroundKB g = ground_kb(n);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < g.clauses.size(); ++k) {
    std::size_t i = g.origin[k];
    const auto& wc = n.clauses()[i];
    bool ground = wc.clause.is_ground() && wc.valuation.weight.free_variables().empty();
    std::string label = n.display_label(i);
    labels.push_back(ground ? label : label + "{" + g.clauses[k].clause.to_string() + "}");
  }

  auto atoms = herbrand_base(g);
  // Satisfied clause set -> literals true in every interpretation producing it.
  std::map<std::vector<bool>, std::set<Literal>> by_sat;
  for_each_interpretation(atoms, cap, [&](const Interpretation& i) {
    std::vector<bool> sat;
    for (const auto& c : g.clauses) sat.push_back(satisfies(i, c.clause));
    std::set<Literal> lits;
    for (const auto& [a, v] : i) lits.insert(Literal{v, a});
    auto [it, fresh] = by_sat.emplace(sat, lits);
    if (!fresh) {
      std::set<Literal> common;
      std::set_intersection(it->second.begin(), it->second.end(), lits.begin(), lits.end(),
                            std::inserter(common, common.begin()));
      it->second = std::move(common);
    }
  });

  auto subset = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i]) return false;
    return true;
  };
  std::vector<Extension> out;
  for (const auto& [sat, lits] : by_sat) {
    bool maximal = true;
    for (const auto& [other, unused] : by_sat)
      if (other != sat && subset(sat, other)) maximal = false;
    if (!maximal) continue;
    Extension e;
    for (std::size_t i = 0; i < sat.size(); ++i) {
      if (sat[i])
        e.labels.push_back(labels[i]);
      else
        e.dropped.push_back(g.clauses[i].valuation.weight.value());
    }
    std::sort(e.dropped.begin(), e.dropped.end(), std::greater<>());
    e.consequences.assign(lits.begin(), lits.end());
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    return compare_dropped(a.dropped, b.dropped) < 0;
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    out[i].rank = out[i - 1].rank + (compare_dropped(out[i - 1].dropped, out[i].dropped) != 0);
  return out;
}

}  // namespace posres
