#pragma once

#include <vector>

#include "posres/kb.hpp"
#include "posres/trace.hpp"

namespace posres {

// A clause produced during saturation, with its derivation.
struct DerivedClause {
  WeightedClause clause;
  Rule rule = Rule::Input;
  std::vector<std::size_t> parents;  // indices into SaturationResult::nodes
  Substitution theta;
  std::size_t depth = 0;
};

struct SaturationOptions {
  enum class Order { BySize, ByValuation };
  Order order = Order::ByValuation;
  std::size_t max_steps = 100000;
  std::size_t max_depth = 64;
  // Keep going after the first empty clause and record one per distinct
  // valuation.
  bool collect_all = false;
  // Subsumption ignores valuations (used for alpha cuts).
  bool classical = false;
};

struct SaturationResult {
  std::vector<DerivedClause> nodes;
  std::vector<std::size_t> empties;  // in order of derivation
  bool incomplete = false;           // a limit cut the search short
};

// Given-clause saturation of the input clauses. kb supplies fuzzy sets and
// domains; its own clauses are ignored. ByValuation pops the clause with the
// highest valuation upper bound, then fewer literals, then lower index, and
// without collect_all stops once no queued clause can beat the best empty
// clause. BySize stops at the first empty clause.
SaturationResult saturate(const KnowledgeBase& kb, const std::vector<WeightedClause>& inputs,
                          const SaturationOptions& opt);

// The derivation of node i, renumbered from 1.
ProofTrace extract_trace(const SaturationResult& r, std::size_t i, SearchStatus status);

}  // namespace posres
