#include <gtest/gtest.h>

#include <random>

#include "posres/engine.hpp"
#include "posres/unify.hpp"
#include "support.hpp"

using namespace posres;
using namespace posres::testing;

namespace {

std::size_t index_of(const WeightedClause& c, const char* lit) {
  Literal l = parse_literal(lit);
  const auto& ls = c.clause.literals();
  auto it = std::find(ls.begin(), ls.end(), l);
  if (it == ls.end()) throw Error(std::string("no literal ") + lit);
  return static_cast<std::size_t>(it - ls.begin());
}

KnowledgeBase decls() {
  return parse_kb("fuzzy phi table { a : 0.5, b : 0.95 }\n"
                  "fuzzy chi table { a : 0.4, b : 0.8 }\n"
                  "fuzzy psi table { a : 0.9, b : 0.3 }\n"
                  "fuzzy late linear (8,0) (12,1)\n"
                  "domain t { a, b }\n"
                  "domain s range 8 12\n");
}

}  // namespace

TEST(ResolveNN, MeetingClauses) {
  KnowledgeBase kb = load_kb("meeting.kb");
  const auto& c1 = kb.clauses()[0];
  const auto& c2 = kb.clauses()[1];
  auto r = resolve_nn(c1, c2, index_of(c1, "~comes(Bob,X)"), index_of(c2, "comes(Bob,m)"), kb);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->clause, parse_clause("~comes(Mary,m)"));
  EXPECT_EQ(r->valuation, val("N 1"));
}

TEST(ResolveNN, InstantiatesVariableWeights) {
  KnowledgeBase kb = decls();
  WeightedClause c1 = wclause("~p(X)|q(X)", "N mu(phi,X)");
  WeightedClause c2 = wclause("p(a)", "N 0.9");
  auto r = resolve_nn(c1, c2, index_of(c1, "~p(X)"), 0, kb);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->clause, parse_clause("q(a)"));
  EXPECT_EQ(r->valuation, val("N 0.5"));
  WeightedClause c3 = wclause("p(b)", "N 0.9");
  EXPECT_EQ(resolve_nn(c1, c3, index_of(c1, "~p(X)"), 0, kb)->valuation, val("N 0.9"));
}

TEST(ResolveNN, SupMinElimination) {
  KnowledgeBase kb = decls();
  // phi(Y,T) is modelled as min(mu(phi,Y), mu(chi,T)).
  WeightedClause c1 = wclause("~p(T)|q(Y)", "N min(mu(phi,Y), mu(chi,T))");
  WeightedClause c2 = wclause("p(X)", "N mu(psi,X)");
  auto r = resolve_nn(c1, c2, index_of(c1, "~p(T)"), 0, kb);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->clause, parse_clause("q(Y)"));
  EXPECT_FALSE(r->valuation.weight.has_free_variable("T"));
  for (const char* y : {"a", "b"}) {
    Substitution sy;
    sy.set("Y", Term::constant(y));
    Degree brute = Degree::zero();
    for (const char* t : {"a", "b"}) {
      Substitution st = sy;
      st.set("T", Term::constant(t));
      Degree inst = min(weight_eval(c1.valuation.weight, st, kb),
                        weight_eval(WeightExpr::memb("psi", Term::constant(t)), {}, kb));
      brute = max(brute, inst);
    }
    EXPECT_EQ(weight_eval(r->valuation.weight, sy, kb), brute) << y;
  }
}

TEST(ResolveNN, IntervalDomainStaysSymbolicUntilClosed) {
  KnowledgeBase kb = decls();
  WeightedClause c1 = wclause("~at(S)|q(Y)", "N min(mu(phi,Y), mu(late,S))");
  WeightedClause c2 = wclause("at(Z)", "N 0.6");
  auto r = resolve_nn(c1, c2, 0, 0, kb);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->valuation.weight.kind(), WeightExpr::Kind::Sup);
  Substitution y;
  y.set("Y", Term::constant("b"));
  EXPECT_EQ(weight_eval(r->valuation.weight, y, kb), deg("0.6"));

  WeightedClause closed = wclause("~at(S)|q(b)", "N mu(late,S)");
  auto r2 = resolve_nn(closed, c2, 0, 0, kb);
  ASSERT_TRUE(r2);
  EXPECT_EQ(r2->valuation, val("N 0.6"));
}

TEST(ResolveNN, FailsWithoutUnifier) {
  KnowledgeBase kb;
  WeightedClause c1 = wclause("p(a)", "N 1");
  WeightedClause c2 = wclause("~p(b)", "N 1");
  EXPECT_FALSE(resolve_nn(c1, c2, 0, 0, kb));
  WeightedClause c3 = wclause("p(b)", "N 1");
  EXPECT_FALSE(resolve_nn(c1, c3, 0, 0, kb));
}

TEST(ResolveNPi, Examples) {
  KnowledgeBase kb = load_kb("meeting.kb");
  const auto& c3 = kb.clauses()[2];
  const auto& c4 = kb.clauses()[3];
  auto r = resolve_npi(c4, c3, 0, index_of(c3, "~comes(a,m)"), kb);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->clause, parse_clause("~quiet(m)"));
  EXPECT_EQ(r->valuation, val("P 0.8"));

  KnowledgeBase none;
  WeightedClause pq = wclause("p|q", "N 0.3");
  WeightedClause np = wclause("~p", "P 0.6");
  auto z = resolve_npi(pq, np, index_of(pq, "p"), 0, none);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->clause, parse_clause("q"));
  EXPECT_EQ(z->valuation, val("P 0"));

  WeightedClause p = wclause("p", "N 1");
  WeightedClause npr = wclause("~p|r", "P 0.35");
  EXPECT_EQ(resolve_npi(p, npr, 0, index_of(npr, "~p"), none)->valuation, val("P 0.35"));
  EXPECT_THROW(resolve_npi(np, pq, 0, 0, none), Error);
}

TEST(ResolveNPi, DefersVariableWeights) {
  KnowledgeBase kb = decls();
  WeightedClause n = wclause("~arr(T)|late", "N mu(late,T)");
  WeightedClause p = wclause("~late", "P 0.5");
  auto r = resolve_npi(n, p, index_of(n, "late"), 0, kb);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->valuation.weight.kind(), WeightExpr::Kind::Gate);
  Substitution t;
  t.set("T", Term::constant("11"));
  EXPECT_EQ(weight_eval(r->valuation.weight, t, kb), deg("0.5"));
  t.set("T", Term::constant("9"));
  EXPECT_EQ(weight_eval(r->valuation.weight, t, kb), deg("0"));
}

TEST(Subsumes, Examples) {
  KnowledgeBase kb;
  EXPECT_TRUE(subsumes(wclause("p(X)", "N 0.9"), wclause("p(a)|q(b)", "N 0.7"), kb));
  EXPECT_FALSE(subsumes(wclause("p(a)", "P 0.9"), wclause("p(a)", "N 0.5"), kb));
  EXPECT_TRUE(subsumes(wclause("p(a)", "N 0.5"), wclause("p(a)", "P 0.9"), kb));
  WeightedClause c = wclause("p(X)|~q(X,Y)", "N 0.4");
  EXPECT_TRUE(subsumes(c, c, kb));
  EXPECT_FALSE(subsumes(wclause("p(X)", "N 0.6"), wclause("p(a)", "N 0.7"), kb));
  EXPECT_FALSE(subsumes(wclause("p(a)|q(a)", "N 1"), wclause("p(a)", "N 0.1"), kb));
  KnowledgeBase d = decls();
  EXPECT_FALSE(subsumes(wclause("p(X)", "N mu(late,X)"), wclause("p(a)", "N 0.1"), d));
  EXPECT_TRUE(subsumes(wclause("p(X)", "N mu(late,X)"), wclause("p(12)", "N 1"), d));
}

TEST(EliminateWeightVar, Examples) {
  KnowledgeBase kb = decls();
  WeightExpr body = val("N min(mu(phi,T), mu(psi,T))").weight;
  EXPECT_EQ(eliminate_weight_var(body, "T", "t", kb), WeightExpr::constant(deg("0.5")));
  KnowledgeBase single = parse_kb("fuzzy phi table { a : 0.5 }\ndomain one { a }");
  EXPECT_EQ(eliminate_weight_var(val("N mu(phi,T)").weight, "T", "one", single),
            WeightExpr::constant(deg("0.5")));
  EXPECT_EQ(eliminate_weight_var(val("N min(0.6, mu(late,S))").weight, "S", "s", kb),
            WeightExpr::constant(deg("0.6")));
  EXPECT_THROW(eliminate_weight_var(val("N mu(phi,T)").weight, "T", "nope", kb), Error);
  WeightExpr w = val("N mu(phi,Q)").weight;
  EXPECT_EQ(eliminate_weight_var(w, "T", "t", kb), w);
}

TEST(AlphaCut, Tweety) {
  KnowledgeBase kb = load_kb("tweety.kb").with_clauses(negate_goal(parse_goal("flies(Tweety)")));
  EXPECT_EQ(saturate_alpha_cut(kb, deg("0.8")).result, CutResult::Refuted);
  EXPECT_EQ(saturate_alpha_cut(kb, deg("0.9")).result, CutResult::Consistent);
  EXPECT_EQ(saturate_alpha_cut(load_kb("tweety.kb"), deg("1")).result, CutResult::Consistent);
  auto cut = saturate_alpha_cut(kb, deg("0.8"));
  ASSERT_TRUE(cut.trace);
  EXPECT_EQ(cut.trace->final, val("N 0.8"));
}

TEST(AlphaCut, RejectsPossibilityClauses) {
  EXPECT_THROW(saturate_alpha_cut(load_kb("meeting.kb"), deg("0.5")), Error);
}

TEST(Refute, MeetingBest) {
  auto r = refute(load_kb("meeting.kb"), parse_goal("~quiet(m)"));
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best, val("N 0.6"));
  EXPECT_EQ(r.engine, SearchConfig::Engine::BestFirst);
  EXPECT_EQ(r.status, SearchStatus::Unverified);
}

TEST(Refute, MeetingAllRefutations) {
  SearchConfig cfg;
  cfg.collect_all_refutations = true;
  auto r = refute(load_kb("meeting.kb"), parse_goal("~quiet(m)"), cfg);
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best, val("N 0.6"));
  bool pi = false;
  for (const auto& t : r.all) pi = pi || t.final == val("P 0.8");
  EXPECT_TRUE(pi);
  EXPECT_EQ(r.all.front().final, val("N 0.6"));
}

TEST(Refute, TweetyAntarctica) {
  auto r = refute(load_kb("tweety-antarctica.kb"), parse_goal("~flies(Tweety)"));
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best, val("N 0.9"));
  EXPECT_EQ(r.status, SearchStatus::Optimal);
  EXPECT_EQ(r.engine, SearchConfig::Engine::AlphaCut);
  SearchConfig bf;
  bf.engine = SearchConfig::Engine::BestFirst;
  EXPECT_EQ(*refute(load_kb("tweety-antarctica.kb"), parse_goal("~flies(Tweety)"), bf).best,
            val("N 0.9"));
}

TEST(Refute, ExistentialGoal) {
  auto r = refute(load_kb("tweety.kb"), parse_goal("flies(X)"));
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best, val("N 0.8"));
  auto both = refute(load_kb("tweety.kb"), parse_goal("flies(X) & bird(X)"));
  EXPECT_EQ(*both.best, val("N 0.8"));
}

TEST(Refute, NoRefutation) {
  auto r = refute(load_kb("empty.kb"), parse_goal("p"));
  EXPECT_FALSE(r.best);
  EXPECT_FALSE(r.trace);
  EXPECT_EQ(r.status, SearchStatus::Optimal);
}

TEST(Refute, LimitsFlagIncomplete) {
  SearchConfig cfg;
  cfg.max_steps = 3;
  auto r = refute(load_kb("meeting.kb"), parse_goal("~quiet(m)"), cfg);
  EXPECT_EQ(r.status, SearchStatus::Incomplete);
  SearchConfig shallow;
  shallow.max_depth = 2;
  auto s = refute(load_kb("tweety-antarctica.kb"), parse_goal("~flies(Tweety)"), shallow);
  EXPECT_EQ(s.status, SearchStatus::Incomplete);
  EXPECT_FALSE(s.best);
  SearchConfig zero;
  zero.max_steps = 0;
  EXPECT_THROW(refute(load_kb("tweety.kb"), parse_goal("flies(Tweety)"), zero), Error);
}

TEST(Refute, ExplicitEmptyClause) {
  auto r = refute(parse_kb("clause false : N 0.4"), std::vector<WeightedClause>{});
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best, val("N 0.4"));
}

TEST(Refute, FactoringIsNeeded) {
  // Unsatisfiable only with factoring: {p(X)|p(Y), ~p(U)|~p(V)}.
  KnowledgeBase kb = parse_kb("clause p(X) | p(Y) : N 0.7\nclause ~p(U) | ~p(V) : N 0.5");
  auto r = refute(kb, std::vector<WeightedClause>{});
  ASSERT_TRUE(r.best);
  EXPECT_EQ(*r.best, val("N 0.5"));
}

TEST(Refute, ResolventsNeverExceedParents) {
  SearchConfig cfg;
  cfg.collect_all_refutations = true;
  for (const char* f : {"meeting.kb", "meeting-updated.kb", "tweety-antarctica.kb"}) {
    KnowledgeBase kb = load_kb(f);
    auto r = refute(kb, parse_goal("~quiet(m)"), cfg);
    for (const auto& t : r.all)
      for (const auto& s : t.steps)
        for (auto p : s.parents) {
          const auto& parent = t.steps[p - 1].result.valuation;
          const auto& child = s.result.valuation;
          Degree pu = weight_upper_bound(parent.weight, kb);
          Degree cu = weight_upper_bound(child.weight, kb);
          EXPECT_TRUE(valuation_cmp(child.kind, cu, parent.kind, pu) <= 0) << f;
        }
  }
}

TEST(NegateGoal, Forms) {
  auto g = negate_goal(parse_goal("p(X) & ~q(X)"));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].clause, parse_clause("~p(X)|q(X)"));
  EXPECT_EQ(g[0].valuation, val("N 1"));
  auto c = negate_clause(parse_clause("p|~q"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].clause, parse_clause("~p"));
  EXPECT_EQ(c[1].clause, parse_clause("q"));
}
