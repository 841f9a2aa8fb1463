#pragma once

// Resolution steps shared by the saturation loop and the public rule API.

#include <optional>
#include <string>
#include <vector>

#include "posres/kb.hpp"

namespace posres::detail {

struct Inference {
  WeightedClause clause;
  Substitution theta;
  // Weight variables the step removed from the clause, still free in the
  // weight, each with the domain it ranges over.
  std::vector<std::pair<std::string, std::string>> eliminated;
};

// Binary resolvent on c1[i] and c2[j]; c1 and c2 must be renamed apart.
// Two possibility-valued parents never resolve.
std::optional<Inference> resolve(const WeightedClause& c1, const WeightedClause& c2,
                                 std::size_t i, std::size_t j, const KnowledgeBase& kb);

// Factors of c obtained by unifying two literals of the same sign.
std::vector<Inference> factors(const WeightedClause& c, const KnowledgeBase& kb);

// Wraps every eliminated variable in a sup over its domain.
WeightExpr eliminate_all(const WeightExpr& w,
                         const std::vector<std::pair<std::string, std::string>>& vars,
                         const KnowledgeBase& kb);

// Valuation of a is at least that of b under every grounding and assignment.
bool provably_geq(const Valuation& a, const Valuation& b, const KnowledgeBase& kb);

// Theta-subsumption of clause bodies; on success s holds the matcher.
bool clause_subsumes(const Clause& c1, const Clause& c2, Substitution& s);

}  // namespace posres::detail
