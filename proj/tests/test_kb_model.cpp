#include <gtest/gtest.h>

#include <random>

#include "posres/kb.hpp"
#include "support.hpp"

using namespace posres;
using namespace posres::testing;

namespace {

KnowledgeBase late_kb() {
  return parse_kb("fuzzy late linear (8,0) (12,1)\n"
                  "fuzzy up linear (0,0) (10,1)\n"
                  "fuzzy down linear (0,1) (10,0)\n"
                  "fuzzy phi table { a : 0.2, b : 0.9, c : 0.5 }\n"
                  "fuzzy psi table { a : 0.7, b : 0.3, c : 0.5 }\n"
                  "domain t range 8 12\n"
                  "domain u range 0 10\n"
                  "domain d { a, b, c }\n");
}

}  // namespace

TEST(Degree, ParsesDecimalsAndFractions) {
  EXPECT_EQ(deg("0.75").value(), Rational(3, 4));
  EXPECT_EQ(deg("3/8").value(), Rational(3, 8));
  EXPECT_EQ(deg("1").to_string(), "1");
  EXPECT_EQ(Degree(Rational(1, 3)).to_string(), "1/3");
  EXPECT_EQ(format_rational(Rational(-17, 8)), "-2.125");
  EXPECT_THROW(deg("1.5"), Error);
  EXPECT_THROW(deg("-0.1"), Error);
  EXPECT_THROW(parse_rational("0.5.1"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Degree, DualIsAnInvolution) {
  for (int n = 0; n <= 20; ++n) {
    Degree a(Rational(n, 20));
    EXPECT_EQ(a.dual().value(), 1 - a.value());
    EXPECT_EQ(a.dual().dual(), a);
  }
}

TEST(Combine, NecessityNecessityIsMin) {
  EXPECT_EQ(combine_nn(deg("1.0"), deg("1.0")), deg("1"));
  EXPECT_EQ(combine_nn(deg("0.8"), deg("0.7")), deg("0.7"));
  EXPECT_EQ(combine_nn(deg("0.0"), deg("0.9")), deg("0"));
}

TEST(Combine, NecessityPossibility) {
  EXPECT_EQ(combine_npi(deg("0.7"), deg("0.8")), deg("0.8"));
  EXPECT_EQ(combine_npi(deg("0.3"), deg("0.6")), deg("0"));
  EXPECT_EQ(combine_npi(deg("1.0"), deg("0.4")), deg("0.4"));
  EXPECT_EQ(combine_npi(deg("0.5"), deg("0.5")), deg("0"));
}

TEST(Combine, Properties) {
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      Degree a(Rational(i, 10)), b(Rational(j, 10));
      EXPECT_EQ(combine_nn(a, b), min(a, b));
      EXPECT_LE(combine_npi(a, b), b);
      if (!combine_npi(a, b).is_zero()) EXPECT_GT(a.value() + b.value(), 1);
    }
}

TEST(ValuationCmp, Examples) {
  EXPECT_TRUE(valuation_cmp(val("P 0.8"), val("N 0.6")) < 0);
  EXPECT_TRUE(valuation_cmp(val("N 0.3"), val("N 0.3")) == 0);
  EXPECT_TRUE(valuation_cmp(val("P 0.2"), val("P 0.9")) < 0);
  EXPECT_TRUE(valuation_cmp(val("N 0"), val("P 1")) == 0);
  EXPECT_TRUE(valuation_cmp(val("P 0.99"), val("N 0")) < 0);
  EXPECT_TRUE(valuation_cmp(val("P 1"), val("N 0.01")) < 0);
}

TEST(ValuationCmp, NonGroundWeightIsAnError) {
  try {
    (void)valuation_cmp(val("N mu(late,T)"), val("N 0.5"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unresolved weight variable"), std::string::npos);
  }
}

TEST(ValuationCmp, IsATotalPreorder) {
  std::vector<Valuation> vs;
  for (int i = 0; i <= 5; ++i) {
    vs.push_back(Valuation::necessity(Degree(Rational(i, 5))));
    vs.push_back(Valuation::possibility(Degree(Rational(i, 5))));
  }
  for (const auto& a : vs)
    for (const auto& b : vs) {
      auto ab = valuation_cmp(a, b);
      auto ba = valuation_cmp(b, a);
      EXPECT_EQ(ab == 0, ba == 0);
      EXPECT_EQ(ab < 0, ba > 0);
      for (const auto& c : vs)
        if (ab <= 0 && valuation_cmp(b, c) <= 0) EXPECT_TRUE(valuation_cmp(a, c) <= 0);
      if (ab == 0 && !(a == b)) {
        // Only the boundary pair shares a rank.
        EXPECT_TRUE(a.weight.value().is_zero() || a.weight.value().is_one());
      }
    }
}

TEST(WeightEval, Membership) {
  KnowledgeBase kb = late_kb();
  Substitution none;
  EXPECT_EQ(weight_eval(WeightExpr::memb("late", Term::constant("11")), none, kb), deg("0.75"));
  EXPECT_EQ(weight_eval(WeightExpr::memb("late", Term::constant("8")), none, kb), deg("0"));
  EXPECT_EQ(weight_eval(val("N min(0.6, mu(late, 12))").weight, none, kb), deg("0.6"));
  EXPECT_EQ(weight_eval(WeightExpr::memb("late", Term::constant("20")), none, kb), deg("1"));
  EXPECT_EQ(weight_eval(WeightExpr::memb("late", Term::constant("0")), none, kb), deg("0"));
  EXPECT_EQ(weight_eval(WeightExpr::memb("phi", Term::constant("b")), none, kb), deg("0.9"));
  EXPECT_EQ(weight_eval(WeightExpr::memb("phi", Term::constant("zz")), none, kb), deg("0"));
}

TEST(WeightEval, BindingsAndErrors) {
  KnowledgeBase kb = late_kb();
  WeightExpr w = val("N mu(late, T)").weight;
  Substitution s;
  s.set("T", Term::constant("10"));
  EXPECT_EQ(weight_eval(w, s, kb), deg("0.5"));
  EXPECT_THROW(weight_eval(w, {}, kb), Error);
  EXPECT_FALSE(try_weight_eval(w, {}, kb).has_value());
  EXPECT_THROW(weight_eval(val("N mu(nope, 1)").weight, {}, kb), Error);
}

TEST(WeightEval, CharNeg) {
  KnowledgeBase kb;
  WeightExpr pos = WeightExpr::charneg(parse_literal("q(a)"));
  WeightExpr neg = WeightExpr::charneg(parse_literal("~q(a)"));
  Assignment t{{parse_atom("q(a)"), true}}, f{{parse_atom("q(a)"), false}};
  EXPECT_EQ(weight_eval(pos, {}, kb, &t), deg("0"));
  EXPECT_EQ(weight_eval(pos, {}, kb, &f), deg("1"));
  EXPECT_EQ(weight_eval(neg, {}, kb, &t), deg("1"));
  EXPECT_EQ(weight_eval(neg, {}, kb, &f), deg("0"));
  EXPECT_THROW(weight_eval(pos, {}, kb), Error);
  Assignment other{{parse_atom("q(b)"), true}};
  EXPECT_THROW(weight_eval(pos, {}, kb, &other), Error);
}

TEST(WeightEval, SupOverFiniteDomainIsMaxOfInstances) {
  KnowledgeBase kb = late_kb();
  WeightExpr body = val("N min(mu(phi, T), mu(psi, T))").weight;
  Degree expect = Degree::zero();
  for (const char* c : {"a", "b", "c"}) {
    Substitution s;
    s.set("T", Term::constant(c));
    expect = max(expect, weight_eval(body, s, kb));
  }
  EXPECT_EQ(weight_eval(WeightExpr::sup("T", "d", body), {}, kb), expect);
  EXPECT_EQ(expect, deg("0.5"));
}

TEST(WeightEval, SupOverIntervalUsesCrossings) {
  KnowledgeBase kb = late_kb();
  WeightExpr body = val("N min(mu(up, T), mu(down, T))").weight;
  // The two pieces cross at 5, where both are 0.5; endpoints give 0.
  EXPECT_EQ(weight_eval(WeightExpr::sup("T", "u", body), {}, kb), deg("0.5"));
  WeightExpr clipped = val("N min(0.6, mu(late, T))").weight;
  EXPECT_EQ(weight_eval(WeightExpr::sup("T", "t", clipped), {}, kb), deg("0.6"));
}

TEST(WeightEval, StaysInUnitInterval) {
  KnowledgeBase kb = late_kb();
  for (int n = -40; n <= 160; ++n) {
    Term x = Term::constant(format_rational(Rational(n, 10)));
    Degree d = weight_eval(WeightExpr::memb("late", x), {}, kb);
    EXPECT_GE(d, Degree::zero());
    EXPECT_LE(d, Degree::one());
  }
}

TEST(WeightExpr, ConstructorsFold) {
  auto c = [](const char* s) { return WeightExpr::constant(deg(s)); };
  WeightExpr m = WeightExpr::memb("late", Term::variable("T"));
  EXPECT_EQ(WeightExpr::min(c("1"), m), m);
  EXPECT_EQ(WeightExpr::min(c("0"), m), c("0"));
  EXPECT_EQ(WeightExpr::max(c("0"), m), m);
  EXPECT_EQ(WeightExpr::gate(c("0.7"), c("0.8")), c("0.8"));
  EXPECT_EQ(WeightExpr::gate(c("1"), m), m);
  EXPECT_EQ(WeightExpr::sup("X", "d", m), m);
  EXPECT_EQ(WeightExpr::min(c("0.3"), c("0.5")), c("0.3"));
}

TEST(WeightExpr, SubstituteAvoidsCapture) {
  WeightExpr w = WeightExpr::sup(
      "T", "d", WeightExpr::min(WeightExpr::memb("phi", Term::variable("T")),
                                WeightExpr::memb("psi", Term::variable("Y"))));
  Substitution s;
  s.set("Y", Term::variable("T"));
  WeightExpr r = w.substitute(s);
  EXPECT_EQ(r.free_variables(), std::set<std::string>{"T"});
  EXPECT_NE(r.name(), "T");
}

TEST(Bounds, UpperAndLower) {
  KnowledgeBase kb = late_kb();
  WeightExpr w = val("N min(0.6, mu(late, T))").weight;
  EXPECT_EQ(weight_upper_bound(w, kb), deg("0.6"));
  EXPECT_EQ(weight_lower_bound(w, kb), deg("0"));
  WeightExpr ch = WeightExpr::min(WeightExpr::constant(deg("0.6")),
                                  WeightExpr::charneg(parse_literal("~comes(Bob,m)")));
  EXPECT_EQ(weight_upper_bound(ch, kb), deg("0.6"));
  EXPECT_EQ(weight_lower_bound(ch, kb), deg("0"));
}

TEST(FoldWeight, EvaluatesGroundParts) {
  KnowledgeBase kb = late_kb();
  EXPECT_EQ(fold_weight(val("N min(0.9, mu(late, 11))").weight, kb),
            WeightExpr::constant(deg("0.75")));
  WeightExpr open = val("N min(0.9, mu(late, T))").weight;
  EXPECT_EQ(fold_weight(open, kb), open);
}

TEST(KnowledgeBase, DomainsAndUniverse) {
  KnowledgeBase kb = load_kb("meeting.kb");
  EXPECT_EQ(kb.clauses().size(), 10u);
  EXPECT_EQ(kb.domain_for_variable("T_3"), "universe");
  auto u = kb.universe();
  EXPECT_NE(std::find(u.begin(), u.end(), Term::constant("Bob")), u.end());
  EXPECT_THROW(kb.resolve_domain("nope"), Error);
  EXPECT_EQ(late_kb().domain_for_variable("T_3"), "t");
  EXPECT_NO_THROW(kb.validate());
  EXPECT_FALSE(kb.is_necessity_only());
  EXPECT_FALSE(kb.has_ground_weights());
}

TEST(KnowledgeBase, ValidateRejectsArityClash) {
  KnowledgeBase kb;
  kb.add_clause(wclause("p(a)", "N 1"));
  kb.add_clause(wclause("p(a,b)", "N 1"));
  EXPECT_THROW(kb.validate(), Error);
}

TEST(WeightExpr, MinMaxAreCanonical) {
  WeightExpr c = val("N charneg(~p(a))").weight;
  EXPECT_EQ(val("N min(min(0.6, min(0.8, charneg(~p(a)))), min(0.7, charneg(~p(a))))").weight,
            WeightExpr::min(WeightExpr::constant(deg("0.6")), c));
  EXPECT_EQ(val("N max(mu(f,X), max(0.2, mu(f,X)))").weight,
            val("N max(0.2, mu(f,X))").weight);
  EXPECT_EQ(val("N min(mu(g,X), mu(f,X))").weight, val("N min(mu(f,X), mu(g,X))").weight);
  EXPECT_EQ(val("N max(0.3, max(1, mu(f,X)))").weight, WeightExpr::constant(deg("1")));
}
