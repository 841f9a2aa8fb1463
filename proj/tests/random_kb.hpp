#pragma once

#include <random>
#include <string>
#include <vector>

#include "posres/kb.hpp"

namespace posres::testing {

// Ground necessity-valued bases over at most six propositional atoms, weights
// drawn from {0.1, ..., 1.0}.
class RandomBases {
 public:
  explicit RandomBases(unsigned seed) : rng_(seed) {}

  int below(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }

  Degree weight() { return Degree(Rational(1 + below(10), 10)); }

  Literal literal(int atoms) {
    return Literal{below(2) == 0, Atom{std::string(1, static_cast<char>('p' + below(atoms))), {}}};
  }

  Clause clause(int atoms, int max_len) {
    std::vector<Literal> lits;
    int n = 1 + below(max_len);
    for (int i = 0; i < n; ++i) lits.push_back(literal(atoms));
    return Clause(std::move(lits));
  }

  KnowledgeBase base(int max_atoms = 6, int max_clauses = 10) {
    int atoms = 1 + below(max_atoms);
    int n = 1 + below(max_clauses);
    KnowledgeBase kb;
    for (int i = 0; i < n; ++i) {
      Clause c = clause(atoms, 3);
      if (c.is_tautology()) continue;
      kb.add_clause({std::move(c), Valuation::necessity(weight()), "k" + std::to_string(i + 1)});
    }
    atoms_ = atoms;
    return kb;
  }

  // Ground clause over the atoms of the last base.
  Clause goal() {
    for (;;) {
      Clause c = clause(atoms_, 2);
      if (!c.is_tautology()) return c;
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  int atoms_ = 1;
};

}  // namespace posres::testing
