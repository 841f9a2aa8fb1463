#include "posres/hypotheses.hpp"

#include <set>

#include "posres/unify.hpp"

namespace posres {

namespace {

void collect_charneg_atoms(const WeightExpr& w, std::set<Atom>& out) {
  switch (w.kind()) {
    case WeightExpr::Kind::CharNeg:
      out.insert(w.literal().atom);
      return;
    case WeightExpr::Kind::Min:
    case WeightExpr::Kind::Max:
    case WeightExpr::Kind::Gate:
      collect_charneg_atoms(w.lhs(), out);
      collect_charneg_atoms(w.rhs(), out);
      return;
    case WeightExpr::Kind::Sup:
      collect_charneg_atoms(w.body(), out);
      return;
    default:
      return;
  }
}

template <typename Pred>
WeightedClause abstract_if(const WeightedClause& c, Pred&& covered) {
  std::vector<Literal> kept;
  WeightExpr w = c.valuation.weight;
  for (const auto& l : c.clause) {
    if (covered(l.atom))
      w = WeightExpr::min(w, WeightExpr::charneg(l));
    else
      kept.push_back(l);
  }
  return {Clause(std::move(kept)), {c.valuation.kind, w}, c.label};
}

// The valuation_cmp-maximum of the non-zero alternatives under a total
// assignment of their charneg atoms.
std::optional<Valuation> best_under(const std::vector<Valuation>& alts, const KnowledgeBase& kb,
                                    const Assignment& a) {
  std::optional<Valuation> best;
  for (const auto& v : alts) {
    WeightExpr w = fold_weight(v.weight, kb, &a);
    if (!w.is_const()) throw Error("unresolved weight variable in " + w.to_string());
    if (w.value().is_zero()) continue;
    Valuation g{v.kind, w};
    if (!best || valuation_cmp(g, *best) > 0) best = g;
  }
  return best;
}

}  // namespace

bool HypothesisSet::covers(const Atom& a) const {
  for (const auto& p : patterns) {
    if (p.predicate != a.predicate) continue;
    if (p.args.empty()) return true;
    Substitution s;
    if (match(p, a, s)) return true;
  }
  return false;
}

WeightedClause abstract_predicate(const WeightedClause& c, const std::string& pred) {
  bool found = false;
  for (const auto& l : c.clause) found = found || l.atom.predicate == pred;
  if (!found) throw Error("predicate '" + pred + "' does not occur in " + c.clause.to_string());
  return abstract_if(c, [&](const Atom& a) { return a.predicate == pred; });
}

WeightedClause abstract_hypotheses(const WeightedClause& c, const HypothesisSet& h) {
  return abstract_if(c, [&](const Atom& a) { return h.covers(a); });
}

KnowledgeBase abstract_base(const KnowledgeBase& kb, const HypothesisSet& h) {
  std::vector<WeightedClause> out;
  for (std::size_t i = 0; i < kb.clauses().size(); ++i) {
    const auto& c = kb.clauses()[i];
    bool all = !c.clause.empty();
    bool any = false;
    for (const auto& l : c.clause) {
      bool cov = h.covers(l.atom);
      all = all && cov;
      any = any || cov;
    }
    if (all) continue;
    out.push_back(any ? abstract_hypotheses(c, h) : c);
    out.back().label = kb.display_label(i);
  }
  return kb.with_clauses_only(std::move(out));
}

std::optional<Valuation> evaluate_answer(const ConditionalAnswer& a, const KnowledgeBase& kb,
                                         const Assignment& assignment) {
  std::vector<Atom> open;
  for (const auto& atom : a.hypothesis_atoms)
    if (!assignment.count(atom)) open.push_back(atom);
  if (open.size() > 20) throw Error("too many open hypothesis atoms");
  std::optional<Valuation> worst;
  bool first = true;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << open.size()); ++bits) {
    Assignment full = assignment;
    for (std::size_t k = 0; k < open.size(); ++k) full[open[k]] = (bits >> k) & 1;
    auto v = best_under(a.alternatives, kb, full);
    if (first) {
      worst = v;
      first = false;
    } else if (!v || (worst && valuation_cmp(*v, *worst) < 0)) {
      worst = v;
    }
    if (!worst) break;
  }
  return worst;
}

ConditionalAnswer hypothesize(const KnowledgeBase& kb, const HypothesisSet& h, const Goal& goal,
                              const SearchConfig& cfg) {
  for (const auto& [atom, value] : h.assignment)
    if (!h.covers(atom) || !atom.is_ground())
      throw Error("assigned atom " + atom.to_string() + " is not a ground hypothesis atom");
  KnowledgeBase base = h.patterns.empty() ? kb : abstract_base(kb, h);
  SearchConfig c = cfg;
  c.engine = SearchConfig::Engine::BestFirst;
  c.collect_all_refutations = true;
  RefutationResult r = refute(base, goal, c);

  ConditionalAnswer a;
  a.goal = goal;
  a.status = r.status;
  std::set<Atom> atoms;
  for (const auto& t : r.all) {
    a.alternatives.push_back(t.final);
    a.traces.push_back(t);
    collect_charneg_atoms(t.final.weight, atoms);
  }
  for (const auto& atom : atoms)
    if (!atom.is_ground()) throw Error("non-ground hypothesis atom " + atom.to_string());
  a.hypothesis_atoms.assign(atoms.begin(), atoms.end());
  a.value = evaluate_answer(a, base, h.assignment);
  return a;
}

}  // namespace posres
