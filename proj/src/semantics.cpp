#include "posres/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace posres {

namespace {

class Sorts {
 public:
  std::size_t node(const std::string& pred, std::size_t pos) {
    auto key = pred + "/" + std::to_string(pos);
    auto [it, fresh] = ids_.emplace(key, parent_.size());
    if (fresh) {
      parent_.push_back(parent_.size());
      members_.emplace_back();
    }
    return it->second;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return;
    parent_[b] = a;
    members_[a].insert(members_[b].begin(), members_[b].end());
  }
  void add(std::size_t n, const Term& c) { members_[find(n)].insert(c); }
  const std::set<Term>& constants(std::size_t n) { return members_[find(n)]; }

 private:
  std::map<std::string, std::size_t> ids_;
  std::vector<std::size_t> parent_;
  std::vector<std::set<Term>> members_;
};

struct Compiled {
  std::uint32_t pos = 0, neg = 0;
  Degree weight;
};

std::vector<Compiled> compile(const std::vector<WeightedClause>& clauses,
                              const std::vector<Atom>& atoms) {
  std::vector<Compiled> out;
  for (const auto& wc : clauses) {
    Compiled c;
    for (const auto& l : wc.clause) {
      auto k = std::lower_bound(atoms.begin(), atoms.end(), l.atom) - atoms.begin();
      (l.positive ? c.pos : c.neg) |= std::uint32_t{1} << k;
    }
    c.weight = wc.valuation.weight.value();
    out.push_back(c);
  }
  return out;
}

bool holds(const Compiled& c, std::uint32_t world) { return (c.pos & world) || (c.neg & ~world); }

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 30)
    throw Error("Herbrand base of " + std::to_string(n) + " atoms exceeds the enumeration cap of " +
                std::to_string(cap));
}

void check_ground(const GroundKB& g) {
  for (const auto& c : g.clauses)
    if (c.valuation.kind != Measure::Necessity || !c.valuation.is_ground() || !c.clause.is_ground())
      throw Error("ground base expected");
}

}  // namespace

GroundKB ground_kb(const KnowledgeBase& kb, const Assignment* hyp) {
  Sorts sorts;
  for (const auto& wc : kb.clauses()) {
    if (wc.valuation.kind != Measure::Necessity)
      throw Error("possibility-valued clauses have no model-theoretic semantics");
    std::map<std::string, std::size_t> var_node;
    for (const auto& l : wc.clause)
      for (std::size_t i = 0; i < l.atom.args.size(); ++i) {
        const Term& t = l.atom.args[i];
        if (t.is_compound()) throw Error("function symbols cannot be grounded: " + t.to_string());
        std::size_t n = sorts.node(l.atom.predicate, i);
        if (t.is_constant()) {
          sorts.add(n, t);
        } else if (auto [it, fresh] = var_node.emplace(t.name(), n); !fresh) {
          sorts.join(it->second, n);
        }
      }
  }
  std::vector<Term> universe = kb.universe();
  if (universe.empty()) universe.push_back(Term::constant("k0"));
  // A sort without constants only meets constants through its variables, and
  // constants with equal memberships in every fuzzy set give equal weights,
  // so one constant per membership profile grounds it without loss.
  std::set<Term> in_hyp;
  if (hyp)
    for (const auto& [a, v] : *hyp)
      for (const auto& t : a.args) in_hyp.insert(t);
  std::vector<Term> representatives;
  std::set<std::vector<Degree>> profiles;
  for (const auto& c : universe) {
    std::vector<Degree> profile;
    for (const auto& [name, f] : kb.fuzzy_defs()) profile.push_back(f.eval(c));
    if (in_hyp.count(c) || profiles.insert(profile).second) representatives.push_back(c);
  }

  GroundKB g;
  for (std::size_t ci = 0; ci < kb.clauses().size(); ++ci) {
    const auto& wc = kb.clauses()[ci];
    std::vector<std::string> vars;
    std::vector<std::vector<Term>> ranges;
    std::set<std::string> seen;
    auto note = [&](const std::string& v, std::optional<std::size_t> n) {
      if (!seen.insert(v).second) return;
      auto dom = kb.domains().find(kb.domain_for_variable(v));
      if (dom != kb.domains().end() && dom->second.is_interval())
        throw Error("variable " + v + " ranges over an infinite domain");
      vars.push_back(v);
      if (!n)
        ranges.push_back(universe);
      else if (!sorts.constants(*n).empty())
        ranges.emplace_back(sorts.constants(*n).begin(), sorts.constants(*n).end());
      else
        ranges.push_back(representatives);
    };
    for (const auto& l : wc.clause)
      for (std::size_t i = 0; i < l.atom.args.size(); ++i)
        if (l.atom.args[i].is_variable()) note(l.atom.args[i].name(), sorts.node(l.atom.predicate, i));
    for (const auto& v : wc.valuation.weight.free_variables()) note(v, std::nullopt);

    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Substitution s;
      for (std::size_t k = 0; k < vars.size(); ++k) s.set(vars[k], ranges[k][idx[k]]);
      g.clauses.push_back({s.apply(wc.clause),
                           {Measure::Necessity,
                            WeightExpr::constant(weight_eval(wc.valuation.weight, s, kb, hyp))},
                           wc.label});
      g.origin.push_back(ci);
      std::size_t k = 0;
      while (k < vars.size() && ++idx[k] == ranges[k].size()) idx[k++] = 0;
      if (k == vars.size()) break;
    }
  }
  return g;
}

std::vector<Atom> herbrand_base(const GroundKB& g, const std::vector<Clause>& extra) {
  std::set<Atom> atoms;
  for (const auto& c : g.clauses)
    for (const auto& l : c.clause) atoms.insert(l.atom);
  for (const auto& c : extra)
    for (const auto& l : c) atoms.insert(l.atom);
  return {atoms.begin(), atoms.end()};
}

bool satisfies(const Interpretation& i, const Clause& c) {
  for (const auto& l : c) {
    auto it = i.find(l.atom);
    if (it == i.end()) throw Error("interpretation does not cover " + l.atom.to_string());
    if (it->second == l.positive) return true;
  }
  return false;
}

Degree model_degree(const Interpretation& i, const WeightedClause& c) {
  if (!c.valuation.is_ground() || c.valuation.kind != Measure::Necessity)
    throw Error("model_degree needs a necessity-valued clause with a constant weight");
  return satisfies(i, c.clause) ? Degree::one() : c.valuation.weight.value().dual();
}

Degree kb_degree(const Interpretation& i, const GroundKB& g) {
  Degree d = Degree::one();
  for (const auto& c : g.clauses) d = min(d, model_degree(i, c));
  return d;
}

void for_each_interpretation(const std::vector<Atom>& atoms, std::size_t cap,
                             const std::function<void(const Interpretation&)>& f) {
  check_cap(atoms.size(), cap);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << atoms.size()); ++w) {
    Interpretation i;
    for (std::size_t k = 0; k < atoms.size(); ++k) i.emplace(atoms[k], (w >> k) & 1);
    f(i);
  }
}

Consistency consistency_degree(const GroundKB& g, std::size_t cap) {
  check_ground(g);
  auto atoms = herbrand_base(g);
  check_cap(atoms.size(), cap);
  auto cs = compile(g.clauses, atoms);
  Degree best = Degree::zero();
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << atoms.size()); ++w) {
    Degree d = Degree::one();
    for (const auto& c : cs) {
      if (!holds(c, w)) d = min(d, c.weight.dual());
      if (d <= best) break;
    }
    if (best < d) best = d;
    if (best.is_one()) break;
  }
  return {best, best.dual()};
}

bool entails(const GroundKB& g, const WeightedClause& c, std::size_t cap) {
  check_ground(g);
  GroundKB single{{c}, {}};
  check_ground(single);
  auto atoms = herbrand_base(g, {c.clause});
  check_cap(atoms.size(), cap);
  auto cs = compile(g.clauses, atoms);
  auto target = compile(single.clauses, atoms).front();
  for (std::uint32_t w = 0; w < (std::uint32_t{1} << atoms.size()); ++w) {
    if (holds(target, w)) continue;
    Degree d = Degree::one();
    for (const auto& k : cs)
      if (!holds(k, w)) d = min(d, k.weight.dual());
    if (target.weight.dual() < d) return false;
  }
  return true;
}

Degree best_necessity(const GroundKB& g, const Clause& c, std::size_t cap) {
  if (!c.is_ground()) throw Error("best_necessity needs a ground clause");
  GroundKB h = g;
  for (const auto& l : c) h.clauses.push_back({Clause({l.negated()}), Valuation::necessity(Degree::one()), "goal"});
  return consistency_degree(h, cap).inc;
}

}  // namespace posres
