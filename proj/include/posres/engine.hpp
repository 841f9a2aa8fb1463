#pragma once

#include <optional>
#include <vector>

#include "posres/kb.hpp"
#include "posres/parser.hpp"
#include "posres/trace.hpp"

namespace posres {

struct SearchConfig {
  enum class Engine { AlphaCut, BestFirst };
  Engine engine = Engine::AlphaCut;
  std::size_t max_steps = 100000;
  std::size_t max_depth = 64;
  bool collect_all_refutations = false;
};

// N⊗N resolution. lit1 and lit2 index complementary literals of c1 and c2, which
// must not share variables. The weight is min of the instantiated weights;
// weight variables that the step removes from the clause are eliminated
// with eliminate_weight_var. Returns nullopt when the atoms do not unify.
std::optional<WeightedClause> resolve_nn(const WeightedClause& c1, const WeightedClause& c2,
                                         std::size_t lit1, std::size_t lit2,
                                         const KnowledgeBase& kb);
// N⊗Π resolution: cn is necessity-valued, cpi possibility-valued.
std::optional<WeightedClause> resolve_npi(const WeightedClause& cn, const WeightedClause& cpi,
                                          std::size_t lit1, std::size_t lit2,
                                          const KnowledgeBase& kb);

// c1 theta-subsumes c2 and its instantiated valuation is provably at least
// that of c2 for every grounding and hypothesis assignment.
bool subsumes(const WeightedClause& c1, const WeightedClause& c2, const KnowledgeBase& kb);

// sup over the domain of var. Finite domains expand to a max of instances;
// closed interval sups evaluate to a constant; anything else stays symbolic.
WeightExpr eliminate_weight_var(const WeightExpr& w, const std::string& var,
                                const std::string& domain, const KnowledgeBase& kb);

// Raised by callers that need a complete search when a limit cut it short.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

enum class CutResult { Refuted, Consistent, Unknown };

struct CutOutcome {
  CutResult result = CutResult::Unknown;
  std::optional<ProofTrace> trace;
};

// Classical saturation of the clauses whose valuation is at least (N alpha),
// weights ignored. Requires a necessity-only base with constant weights.
CutOutcome saturate_alpha_cut(const KnowledgeBase& kb, const Degree& alpha,
                              const SearchConfig& cfg = {});

struct RefutationResult {
  std::optional<Valuation> best;
  std::optional<ProofTrace> trace;
  // One refutation per distinct empty-clause valuation, best first.
  std::vector<ProofTrace> all;
  SearchStatus status = SearchStatus::Unverified;
  SearchConfig::Engine engine = SearchConfig::Engine::AlphaCut;
};

// Refutes kb plus the assumption clauses. The alpha-cut engine runs only on
// necessity-only bases with constant weights and without collect-all; other
// requests use best-first search.
RefutationResult refute(const KnowledgeBase& kb, const std::vector<WeightedClause>& assumptions,
                        const SearchConfig& cfg = {});
RefutationResult refute(const KnowledgeBase& kb, const Goal& goal, const SearchConfig& cfg = {});

// ~l1 | ... | ~ln with (N 1), labelled "goal"; goal variables stay variables.
std::vector<WeightedClause> negate_goal(const Goal& goal);
// One unit (~l, N 1) per literal of a ground clause, labelled "goal".
std::vector<WeightedClause> negate_clause(const Clause& c);

}  // namespace posres
