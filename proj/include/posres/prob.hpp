#pragma once

#include <optional>
#include <vector>

#include "posres/term.hpp"
#include "posres/degree.hpp"

namespace posres {

// A ground clause with a lower bound on its probability (comparison mode).
struct ProbClause {
  Clause clause;
  Rational bound;
};

// Probabilistic resolution: Prob(q | r) >= max(0, a + b - 1). The literals at i and j must be
// complementary ground literals.
std::optional<ProbClause> resolve_prob(const ProbClause& a, const ProbClause& b, std::size_t i,
                                       std::size_t j);

// Best bound on Prob(target) certified by exhaustive probabilistic resolution: the
// largest bound of any derivable clause whose literals are a subset of target.
Rational prob_resolution_bound(const std::vector<ProbClause>& base, const Clause& target);

// min objective . x  subject to  x >= 0, sum x = 1, and row . x >= rhs.
struct SimplexProgram {
  std::size_t dimension = 0;
  std::vector<std::pair<std::vector<Rational>, Rational>> constraints;
  std::vector<Rational> objective;
};

// Exact minimum by enumerating the vertices of the feasible polytope.
// nullopt when infeasible.
std::optional<Rational> simplex_min_vertices(const SimplexProgram& p);
// Minimum over the grid of points whose coordinates are multiples of 1/steps.
std::optional<Rational> simplex_min_grid(const SimplexProgram& p, int steps);

// Possible-worlds encoding of the base: one coordinate per truth assignment
// of the atoms, constraints Prob(clause) >= bound, objective Prob(target).
SimplexProgram world_program(const std::vector<ProbClause>& base, const Clause& target);

}  // namespace posres
