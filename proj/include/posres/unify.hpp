#pragma once

#include <optional>

#include "posres/kb.hpp"
#include "posres/term.hpp"

namespace posres {

// Most general unifier of two terms / atoms, with occurs check.
std::optional<Substitution> mgu(const Term& a, const Term& b);
std::optional<Substitution> mgu(const Atom& a, const Atom& b);
// Unifies the atoms of two literals; signs are the caller's business.
std::optional<Substitution> mgu(const Literal& a, const Literal& b);

// One-way matching: extends s so that s(pattern) == target, binding only
// variables of pattern. Terms of target are treated as rigid.
bool match(const Term& pattern, const Term& target, Substitution& s);
bool match(const Atom& pattern, const Atom& target, Substitution& s);

// Substitutes in every literal and inside the weight; kind and label kept.
WeightedClause apply_subst(const WeightedClause& c, const Substitution& s);

// Fresh variables V -> <base(V)>_<seed>, consistent between clause and weight.
WeightedClause rename_apart(const WeightedClause& c, std::size_t seed);

// Renames variables to their bases (X_12 -> X), adding _1, _2, ... only where
// two variables share a base. Deterministic for a given clause.
WeightedClause normalize_variables(const WeightedClause& c);

}  // namespace posres
