#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posres/degree.hpp"
#include "posres/term.hpp"
#include "posres/weight.hpp"

namespace posres {

enum class Measure { Necessity, Possibility };

struct Valuation {
  Measure kind = Measure::Necessity;
  WeightExpr weight;

  static Valuation necessity(const Degree& d) {
    return {Measure::Necessity, WeightExpr::constant(d)};
  }
  static Valuation possibility(const Degree& d) {
    return {Measure::Possibility, WeightExpr::constant(d)};
  }
  bool is_ground() const { return weight.is_const(); }
  // "N 0.6", "P 0.8"
  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

struct WeightedClause {
  Clause clause;
  Valuation valuation;
  std::optional<std::string> label;

  friend bool operator==(const WeightedClause&, const WeightedClause&) = default;
};

// Truth values fixed for hypothesis atoms. Atoms not in the map are open.
using Assignment = std::map<Atom, bool>;

class KnowledgeBase {
 public:
  void add_clause(WeightedClause c) { clauses_.push_back(std::move(c)); }
  void add_fuzzy(FuzzyDef f);
  void add_domain(DomainDecl d);

  const std::vector<WeightedClause>& clauses() const { return clauses_; }
  std::vector<WeightedClause>& mutable_clauses() { return clauses_; }
  const std::map<std::string, FuzzyDef>& fuzzy_defs() const { return fuzzy_; }
  const std::map<std::string, DomainDecl>& domains() const { return domains_; }

  const FuzzyDef* fuzzy(const std::string& name) const;
  // Declared domain, or the Herbrand constants for "universe" when no domain
  // of that name is declared. Throws on an undeclared name.
  DomainDecl resolve_domain(const std::string& name) const;
  // Domain used when resolution eliminates weight variable var: the declared
  // domain named after the lower-cased variable base, else "universe".
  std::string domain_for_variable(const std::string& var) const;
  // Constants occurring in clause literals (recursively), sorted.
  std::vector<Term> universe() const;

  // Label of clause i, or "#<i+1>" when it has none.
  std::string display_label(std::size_t i) const;

  // Checks label uniqueness, arities, fuzzy-set and domain references.
  void validate() const;

  // Same declarations and clauses plus extra.
  KnowledgeBase with_clauses(const std::vector<WeightedClause>& extra) const;
  KnowledgeBase with_clauses_only(std::vector<WeightedClause> clauses) const;

  bool is_necessity_only() const;
  bool has_ground_weights() const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;

 private:
  std::vector<WeightedClause> clauses_;
  std::map<std::string, FuzzyDef> fuzzy_;
  std::map<std::string, DomainDecl> domains_;
};

// Total preorder on ground valuations: (N a) and (P a) compare by degree;
// every (P a) with a < 1 is below every (N b) with b > 0; (N 0) and (P 1)
// share one rank between the two. Throws Error("unresolved weight variable")
// when either weight is not a constant.
std::strong_ordering valuation_cmp(const Valuation& a, const Valuation& b);
std::strong_ordering valuation_cmp(Measure ka, const Degree& a, Measure kb, const Degree& b);

// Evaluates w under binding (variables -> ground terms). hyp supplies truth
// values for charneg atoms. Throws Error on unbound variables, undeclared
// fuzzy sets or domains, unassigned charneg atoms.
Degree weight_eval(const WeightExpr& w, const Substitution& binding, const KnowledgeBase& kb,
                   const Assignment* hyp = nullptr);

// As weight_eval but returns nullopt instead of throwing when the expression
// cannot be resolved yet (unbound variables, unassigned charneg atoms).
std::optional<Degree> try_weight_eval(const WeightExpr& w, const Substitution& binding,
                                      const KnowledgeBase& kb, const Assignment* hyp = nullptr);

// Partial evaluation: every resolvable subexpression becomes a constant.
WeightExpr fold_weight(const WeightExpr& w, const KnowledgeBase& kb,
                       const Assignment* hyp = nullptr);

// Bounds over all groundings and hypothesis assignments.
Degree weight_upper_bound(const WeightExpr& w, const KnowledgeBase& kb);
Degree weight_lower_bound(const WeightExpr& w, const KnowledgeBase& kb);

// sup over domain of body with var bound to each element; other variables
// taken from binding. Interval domains are evaluated exactly at endpoints,
// breakpoints and crossings of the linear pieces.
Degree sup_over_domain(const WeightExpr& body, const std::string& var, const DomainDecl& domain,
                       const Substitution& binding, const KnowledgeBase& kb,
                       const Assignment* hyp = nullptr);

}  // namespace posres
