#include "posres/prover.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "posres/engine.hpp"
#include "posres/unify.hpp"
#include "resolve.hpp"

namespace posres {

namespace {

struct Key {
  Measure kind;
  Degree bound;
  std::size_t size;
  std::size_t symbols;
  std::size_t index;
};

class Saturator {
 public:
  Saturator(const KnowledgeBase& kb, const SaturationOptions& opt) : kb_(kb), opt_(opt) {}

  SaturationResult run(const std::vector<WeightedClause>& inputs) {
    for (const auto& c : inputs) {
      DerivedClause d;
      d.clause = normalize_variables(c);
      d.rule = Rule::Input;
      add(std::move(d));
      if (stop_) return std::move(out_);
    }
    while (!passive_.empty() && !stop_) {
      std::size_t g = pop();
      if (stop_) break;
      const WeightedClause& given = out_.nodes[g].clause;
      if (given.clause.empty()) {
        record_empty(g);
        continue;
      }
      if (forward_subsumed(given)) continue;
      for (std::size_t a : active_)
        if (alive_[a] && subsumes(given, out_.nodes[a].clause)) alive_[a] = false;
      alive_[g] = true;
      active_.push_back(g);
      generate(g);
    }
    return std::move(out_);
  }

 private:
  bool before(const Key& a, const Key& b) const {
    if (opt_.order == SaturationOptions::Order::ByValuation) {
      auto c = valuation_cmp(a.kind, a.bound, b.kind, b.bound);
      if (c != 0) return c > 0;
    }
    if (a.size != b.size) return a.size < b.size;
    if (opt_.order == SaturationOptions::Order::BySize && a.symbols != b.symbols)
      return a.symbols < b.symbols;
    return a.index < b.index;
  }

  struct KeyLess {
    const Saturator* self;
    bool operator()(const Key& a, const Key& b) const { return self->before(a, b); }
  };

  Key key_of(std::size_t i) const {
    const auto& c = out_.nodes[i].clause;
    return {c.valuation.kind, weight_upper_bound(c.valuation.weight, kb_), c.clause.size(),
            c.clause.symbol_count(), i};
  }

  std::size_t pop() {
    Key top = *passive_.begin();
    passive_.erase(passive_.begin());
    if (!opt_.collect_all && best_ && opt_.order == SaturationOptions::Order::ByValuation &&
        valuation_cmp(top.kind, top.bound, best_->first, best_->second) <= 0)
      stop_ = true;
    return top.index;
  }

  void record_empty(std::size_t g) {
    const auto& v = out_.nodes[g].clause.valuation;
    if (opt_.collect_all) {
      for (std::size_t e : out_.empties)
        if (out_.nodes[e].clause.valuation == v) return;
    }
    out_.empties.push_back(g);
    if (opt_.order == SaturationOptions::Order::BySize) {
      stop_ = true;
      return;
    }
    if (v.is_ground()) {
      std::pair<Measure, Degree> val{v.kind, v.weight.value()};
      if (!best_ || valuation_cmp(val.first, val.second, best_->first, best_->second) > 0)
        best_ = val;
      // Everything still queued is bounded by this clause's own priority.
      if (!opt_.collect_all) stop_ = true;
    }
  }

  bool subsumes(const WeightedClause& a, const WeightedClause& b) const {
    if (opt_.classical) {
      Substitution s;
      return detail::clause_subsumes(a.clause, b.clause, s);
    }
    // Alternative refutations of another kind must survive when all are collected.
    if (opt_.collect_all && a.valuation.kind != b.valuation.kind) return false;
    return posres::subsumes(a, b, kb_);
  }

  bool forward_subsumed(const WeightedClause& c) const {
    for (std::size_t a : active_)
      if (alive_[a] && subsumes(out_.nodes[a].clause, c)) return true;
    return false;
  }

  void generate(std::size_t g) {
    WeightedClause given = rename_apart(out_.nodes[g].clause, 0);
    for (auto& f : detail::factors(given, kb_)) {
      derive(std::move(f), Rule::Factor, {g});
      if (stop_) return;
    }
    std::vector<std::size_t> partners = active_;
    for (std::size_t a : partners) {
      if (!alive_[a]) continue;
      WeightedClause other = rename_apart(out_.nodes[a].clause, 1);
      if (given.valuation.kind == Measure::Possibility &&
          other.valuation.kind == Measure::Possibility)
        continue;
      for (std::size_t i = 0; i < given.clause.size(); ++i)
        for (std::size_t j = 0; j < other.clause.size(); ++j) {
          auto inf = detail::resolve(given, other, i, j, kb_);
          if (!inf) continue;
          Rule rule = given.valuation.kind == Measure::Necessity &&
                              other.valuation.kind == Measure::Necessity
                          ? Rule::NN
                          : Rule::NPi;
          std::vector<std::size_t> parents{g, a};
          if (given.valuation.kind == Measure::Possibility) std::swap(parents[0], parents[1]);
          derive(std::move(*inf), rule, parents);
          if (stop_) return;
        }
    }
  }

  void derive(detail::Inference inf, Rule rule, std::vector<std::size_t> parents) {
    std::size_t depth = 0;
    for (std::size_t p : parents) depth = std::max(depth, out_.nodes[p].depth + 1);
    if (depth > opt_.max_depth) {
      out_.incomplete = true;
      return;
    }
    if (++steps_ > opt_.max_steps) {
      out_.incomplete = true;
      stop_ = true;
      return;
    }
    inf.clause.label.reset();
    if (inf.clause.clause.is_tautology()) return;
    if (!viable(inf.clause)) return;
    DerivedClause d;
    d.rule = rule;
    d.parents = std::move(parents);
    d.theta = std::move(inf.theta);
    d.depth = depth;
    if (inf.eliminated.empty()) {
      d.clause = normalize_variables(inf.clause);
      add(std::move(d));
      return;
    }
    // The raw resolvent is kept as an intermediate node and the sup step derived from it.
    d.clause = inf.clause;
    std::size_t raw = out_.nodes.size();
    out_.nodes.push_back(std::move(d));
    alive_.push_back(false);
    DerivedClause s;
    s.rule = Rule::SupElim;
    s.parents = {raw};
    s.depth = depth;
    s.clause = inf.clause;
    s.clause.valuation.weight =
        fold_weight(detail::eliminate_all(inf.clause.valuation.weight, inf.eliminated, kb_), kb_);
    s.clause = normalize_variables(s.clause);
    if (!viable(s.clause)) return;
    add(std::move(s));
  }

  bool viable(const WeightedClause& c) const {
    return !weight_upper_bound(c.valuation.weight, kb_).is_zero();
  }

  void add(DerivedClause d) {
    if (d.clause.clause.is_tautology() || !viable(d.clause)) {
      out_.nodes.push_back(std::move(d));
      alive_.push_back(false);
      return;
    }
    std::string sig = d.clause.clause.to_string() + " " + d.clause.valuation.to_string();
    if (!seen_.insert(sig).second) return;
    std::size_t i = out_.nodes.size();
    out_.nodes.push_back(std::move(d));
    alive_.push_back(false);
    passive_.insert(key_of(i));
  }

  const KnowledgeBase& kb_;
  SaturationOptions opt_;
  SaturationResult out_;
  std::set<Key, KeyLess> passive_{KeyLess{this}};
  std::vector<std::size_t> active_;
  std::vector<bool> alive_;
  std::unordered_set<std::string> seen_;
  std::optional<std::pair<Measure, Degree>> best_;
  std::size_t steps_ = 0;
  bool stop_ = false;
};

}  // namespace

SaturationResult saturate(const KnowledgeBase& kb, const std::vector<WeightedClause>& inputs,
                          const SaturationOptions& opt) {
  return Saturator(kb, opt).run(inputs);
}

ProofTrace extract_trace(const SaturationResult& r, std::size_t i, SearchStatus status) {
  std::set<std::size_t> keep;
  std::vector<std::size_t> todo{i};
  while (!todo.empty()) {
    std::size_t n = todo.back();
    todo.pop_back();
    if (!keep.insert(n).second) continue;
    for (std::size_t p : r.nodes.at(n).parents) todo.push_back(p);
  }
  std::map<std::size_t, std::size_t> renumber;
  ProofTrace t;
  for (std::size_t n : keep) {
    const auto& d = r.nodes[n];
    ProofStep s;
    s.id = renumber.size() + 1;
    renumber[n] = s.id;
    s.rule = d.rule;
    for (std::size_t p : d.parents) s.parents.push_back(renumber.at(p));
    s.theta = d.theta;
    s.result = d.clause;
    if (d.rule != Rule::Input) s.result.label.reset();
    t.steps.push_back(std::move(s));
  }
  t.final = r.nodes.at(i).clause.valuation;
  t.status = status;
  return t;
}

}  // namespace posres
