#pragma once

#include <string>
#include <vector>

#include "posres/engine.hpp"
#include "posres/semantics.hpp"

namespace posres {

enum class IncRoute { Refutation, Semantic };

// Necessity-valued clauses of kb; possibility-valued ones are dropped.
KnowledgeBase necessity_part(const KnowledgeBase& kb);

// Inc of the necessity-valued part of kb: the best empty-clause weight
// derivable from it, or 1 - c(K) by enumeration. Throws SearchLimitError when
// the refutation search is cut short.
Degree inconsistency_degree(const KnowledgeBase& kb, IncRoute route = IncRoute::Refutation,
                            const SearchConfig& cfg = {});

struct QueryVerdict {
  std::optional<Valuation> best;  // best refutation of kb plus the negated goal
  Degree beta;                    // its necessity weight, 0 when none
  Degree inc;
  bool valid = false;             // beta > inc
  std::vector<std::string> support;  // input labels of the optimal refutation
  SearchStatus status = SearchStatus::Unverified;
  std::optional<ProofTrace> trace;
};

QueryVerdict query(const KnowledgeBase& kb, const Goal& goal, const SearchConfig& cfg = {},
                   IncRoute route = IncRoute::Refutation);

struct MinRelation {
  Degree beta;        // from kb plus the negated goal
  Degree beta_prime;  // from kb plus the goal
  Degree inc;
  bool holds = false;  // min(beta, beta_prime) == inc
};

// Goal variables are replaced by fresh constants before the goal is asserted.
MinRelation check_min_relation(const KnowledgeBase& kb, const Goal& goal,
                               const SearchConfig& cfg = {});

struct Extension {
  std::vector<std::string> labels;    // clauses kept, in base order
  std::vector<Degree> dropped;        // weights of the clauses left out, descending
  std::vector<Literal> consequences;  // ground literals true in every model
  std::size_t rank = 0;               // 0 for the preferred group

  // "{u, ¬v}"
  std::string consequences_string() const;
};

// Maximal classically consistent sub-bases of the grounded necessity part,
// best first. Extensions with equal dropped-weight lists share a rank.
std::vector<Extension> preferred_extensions(const KnowledgeBase& kb,
                                            std::size_t cap = kDefaultAtomCap);

// Lexicographic comparison of descending dropped-weight lists; a shorter list
// wins on an equal prefix. Negative when a is preferred.
int compare_dropped(const std::vector<Degree>& a, const std::vector<Degree>& b);

}  // namespace posres
