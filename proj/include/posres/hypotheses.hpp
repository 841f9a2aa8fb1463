#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posres/engine.hpp"

namespace posres {

struct HypothesisSet {
  // Atom patterns: comes(Bob,X) covers every instance; a bare name covers
  // every atom of that predicate.
  std::vector<Atom> patterns;
  // Fixed truth values of ground hypothesis atoms; the rest are open.
  Assignment assignment;

  bool covers(const Atom& a) const;
};

// Removes the literals of pred from c and conjoins charneg(L) for each removed
// literal L with the weight. Throws when pred does not occur in c.
WeightedClause abstract_predicate(const WeightedClause& c, const std::string& pred);

// Same for every literal covered by h.
WeightedClause abstract_hypotheses(const WeightedClause& c, const HypothesisSet& h);

struct ConditionalAnswer {
  Goal goal;
  // Kind-tagged symbolic valuations, one per refutation found, best bound first.
  std::vector<Valuation> alternatives;
  std::vector<ProofTrace> traces;
  // Ground atoms inside charneg weights of the alternatives.
  std::vector<Atom> hypothesis_atoms;
  // The answer under HypothesisSet::assignment; open atoms take the worst case.
  std::optional<Valuation> value;
  SearchStatus status = SearchStatus::Unverified;
};

// Best alternative under the assignment: the valuation_cmp-maximum of the
// non-zero alternatives, minimised over the completions of open atoms.
// nullopt when no alternative survives.
std::optional<Valuation> evaluate_answer(const ConditionalAnswer& a, const KnowledgeBase& kb,
                                         const Assignment& assignment);

// Abstracts the hypothesis literals, drops clauses made only of them, and
// collects every refutation of the goal with symbolic weights.
ConditionalAnswer hypothesize(const KnowledgeBase& kb, const HypothesisSet& h, const Goal& goal,
                              const SearchConfig& cfg = {});

// The base hypothesize works on.
KnowledgeBase abstract_base(const KnowledgeBase& kb, const HypothesisSet& h);

}  // namespace posres
