#include "posres/prob.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace posres {

std::optional<ProbClause> resolve_prob(const ProbClause& a, const ProbClause& b, std::size_t i,
                                       std::size_t j) {
  const Literal& la = a.clause.literals().at(i);
  const Literal& lb = b.clause.literals().at(j);
  if (la.positive == lb.positive || !(la.atom == lb.atom)) return std::nullopt;
  if (!la.is_ground()) throw Error("probabilistic clauses must be ground");
  std::vector<Literal> lits;
  for (std::size_t k = 0; k < a.clause.size(); ++k)
    if (k != i) lits.push_back(a.clause.literals()[k]);
  for (std::size_t k = 0; k < b.clause.size(); ++k)
    if (k != j) lits.push_back(b.clause.literals()[k]);
  Rational bound = a.bound + b.bound - 1;
  if (bound < 0) bound = 0;
  return ProbClause{Clause(std::move(lits)), bound};
}

Rational prob_resolution_bound(const std::vector<ProbClause>& base, const Clause& target) {
  std::map<Clause, Rational> best;
  for (const auto& c : base) {
    auto [it, fresh] = best.emplace(c.clause, c.bound);
    if (!fresh && it->second < c.bound) it->second = c.bound;
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<ProbClause> current;
    for (const auto& [c, b] : best) current.push_back({c, b});
    for (const auto& x : current)
      for (const auto& y : current)
        for (std::size_t i = 0; i < x.clause.size(); ++i)
          for (std::size_t j = 0; j < y.clause.size(); ++j) {
            auto r = resolve_prob(x, y, i, j);
            if (!r || r->clause.is_tautology()) continue;
            auto [it, fresh] = best.emplace(r->clause, r->bound);
            if (fresh || it->second < r->bound) {
              it->second = r->bound;
              changed = true;
            }
          }
  }
  Rational out = 0;
  for (const auto& [c, b] : best)
    if (std::includes(target.begin(), target.end(), c.begin(), c.end()) && out < b) out = b;
  return out;
}

namespace {

// Solves the square system m x = rhs; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m,
                                           std::vector<Rational> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool feasible(const SimplexProgram& p, const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& [row, rhs] : p.constraints)
    if (dot(row, x) < rhs) return false;
  return true;
}

}  // namespace

std::optional<Rational> simplex_min_vertices(const SimplexProgram& p) {
  std::size_t n = p.dimension;
  if (n == 0) throw Error("empty simplex");
  // Candidate tight rows: the constraints, then x_k >= 0.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& [row, b] : p.constraints) {
    rows.push_back(row);
    rhs.push_back(b);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> e(n, 0);
    e[k] = 1;
    rows.push_back(e);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == n - 1) {
      std::vector<std::vector<Rational>> m{std::vector<Rational>(n, 1)};
      std::vector<Rational> b{1};
      for (std::size_t r : pick) {
        m.push_back(rows[r]);
        b.push_back(rhs[r]);
      }
      auto x = solve(std::move(m), std::move(b));
      if (x && feasible(p, *x)) {
        Rational v = dot(p.objective, *x);
        if (!best || v < *best) best = v;
      }
      return;
    }
    for (std::size_t r = from; r < rows.size(); ++r) {
      pick.push_back(r);
      choose(r + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best;
}

std::optional<Rational> simplex_min_grid(const SimplexProgram& p, int steps) {
  std::size_t n = p.dimension;
  std::optional<Rational> best;
  std::vector<int> units(n, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t k, int left) {
    if (k + 1 == n) {
      units[k] = left;
      std::vector<Rational> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = Rational(units[i], steps);
      if (feasible(p, x)) {
        Rational v = dot(p.objective, x);
        if (!best || v < *best) best = v;
      }
      return;
    }
    for (int u = 0; u <= left; ++u) {
      units[k] = u;
      fill(k + 1, left - u);
    }
  };
  fill(0, steps);
  return best;
}

SimplexProgram world_program(const std::vector<ProbClause>& base, const Clause& target) {
  std::set<Atom> atom_set;
  for (const auto& c : base)
    for (const auto& l : c.clause) atom_set.insert(l.atom);
  for (const auto& l : target) atom_set.insert(l.atom);
  std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > 16) throw Error("too many atoms for the possible-worlds encoding");
  std::size_t worlds = std::size_t{1} << atoms.size();
  auto holds = [&](const Clause& c, std::size_t w) {
    for (const auto& l : c) {
      std::size_t k = std::lower_bound(atoms.begin(), atoms.end(), l.atom) - atoms.begin();
      if (((w >> k) & 1) == (l.positive ? 1u : 0u)) return true;
    }
    return false;
  };
  auto indicator = [&](const Clause& c) {
    std::vector<Rational> row(worlds, 0);
    for (std::size_t w = 0; w < worlds; ++w)
      if (holds(c, w)) row[w] = 1;
    return row;
  };
  SimplexProgram p;
  p.dimension = worlds;
  for (const auto& c : base) p.constraints.emplace_back(indicator(c.clause), c.bound);
  p.objective = indicator(target);
  return p;
}

}  // namespace posres
