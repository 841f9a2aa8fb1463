#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posres/kb.hpp"

namespace posres {

enum class Rule { Input, NN, NPi, Factor, SupElim };

// "input", "N⊗N", "N⊗Π", "factor", "sup"
const char* rule_name(Rule r);

struct ProofStep {
  std::size_t id = 0;
  Rule rule = Rule::Input;
  std::vector<std::size_t> parents;
  Substitution theta;
  WeightedClause result;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

enum class SearchStatus { Optimal, Unverified, Incomplete };

const char* status_name(SearchStatus s);

// Steps are numbered from 1 and every parent precedes its child. The last step
// derives the empty clause.
struct ProofTrace {
  std::vector<ProofStep> steps;
  Valuation final;
  SearchStatus status = SearchStatus::Unverified;

  // Labels of the input steps, in step order.
  std::vector<std::string> input_labels() const;

  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

// One line per step:
//   step 1 input label=C5 clause=~comes(Albert,m)|~quiet(m) val=N 1
//   step 4 N⊗N parents=1,3 theta=X_1=m clause=[] val=N 0.6
// followed by "RESULT val=N 0.6 optimal".
std::string serialize_trace(const ProofTrace& t);
std::string serialize_step(const ProofStep& s);
ProofTrace parse_trace(std::string_view text);

}  // namespace posres
