#pragma once

#include <functional>
#include <vector>

#include "posres/kb.hpp"

namespace posres {

// Ground necessity-valued clauses with constant weights.
struct GroundKB {
  std::vector<WeightedClause> clauses;
  // Index of the source clause of each instance, when built by ground_kb.
  std::vector<std::size_t> origin;
};

// Total truth assignment over a Herbrand base.
using Interpretation = std::map<Atom, bool>;

inline constexpr std::size_t kDefaultAtomCap = 20;

// Instantiates every clause over the constants its variables can take.
// Argument positions linked by a shared variable form one sort; a variable
// ranges over the constants seen at positions of its sort, or over one base
// constant per fuzzy membership profile when its sort has none. Weights are
// evaluated per instance. Throws on function symbols, possibility-valued
// clauses and variables whose domain is an interval.
GroundKB ground_kb(const KnowledgeBase& kb, const Assignment* hyp = nullptr);

// Atoms of the clauses of g plus those of extra, sorted.
std::vector<Atom> herbrand_base(const GroundKB& g, const std::vector<Clause>& extra = {});

bool satisfies(const Interpretation& i, const Clause& c);

// 1 when i satisfies the clause, else 1 - weight.
Degree model_degree(const Interpretation& i, const WeightedClause& c);
// min over the clauses; 1 for an empty base.
Degree kb_degree(const Interpretation& i, const GroundKB& g);

// Calls f for each of the 2^n interpretations of atoms.
void for_each_interpretation(const std::vector<Atom>& atoms, std::size_t cap,
                             const std::function<void(const Interpretation&)>& f);

struct Consistency {
  Degree c;    // max over interpretations of kb_degree
  Degree inc;  // 1 - c
};

Consistency consistency_degree(const GroundKB& g, std::size_t cap = kDefaultAtomCap);

// For every interpretation, model_degree of c is at least kb_degree of g.
bool entails(const GroundKB& g, const WeightedClause& c, std::size_t cap = kDefaultAtomCap);

// Inc of g plus (~l, N 1) for every literal l of the ground clause.
Degree best_necessity(const GroundKB& g, const Clause& c, std::size_t cap = kDefaultAtomCap);

}  // namespace posres
