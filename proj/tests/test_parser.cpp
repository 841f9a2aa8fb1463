#include <gtest/gtest.h>

#include <random>

#include "posres/parser.hpp"
#include "support.hpp"

using namespace posres;
using namespace posres::testing;

TEST(ParseKb, CertainClause) {
  KnowledgeBase kb = parse_kb("clause ~comes(Bob,X) | ~comes(Mary,X) : N 1.0");
  ASSERT_EQ(kb.clauses().size(), 1u);
  const auto& c = kb.clauses()[0];
  EXPECT_EQ(c.clause.size(), 2u);
  EXPECT_EQ(c.valuation, val("N 1"));
  EXPECT_FALSE(c.clause.literals()[0].positive);
  EXPECT_TRUE(c.clause.literals()[0].atom.args[0].is_constant());
  EXPECT_TRUE(c.clause.literals()[0].atom.args[1].is_variable());
}

TEST(ParseKb, VariableWeight) {
  KnowledgeBase kb = parse_kb(
      "fuzzy late linear (8,0) (12,1)\n"
      "clause ~arrives(John,m,T) | quiet(m) : N mu(late,T)");
  const auto& w = kb.clauses()[0].valuation.weight;
  EXPECT_EQ(w.kind(), WeightExpr::Kind::Memb);
  EXPECT_EQ(w.name(), "late");
  EXPECT_EQ(w.arg(), Term::variable("T"));
}

TEST(ParseKb, EmptyClause) {
  KnowledgeBase kb = parse_kb("clause false : N 0.3");
  EXPECT_TRUE(kb.clauses()[0].clause.empty());
  EXPECT_EQ(kb.clauses()[0].valuation, val("N 0.3"));
}

TEST(ParseKb, LabelsCommentsAndDeclarations) {
  KnowledgeBase kb = parse_kb(
      "# comment\n"
      "fuzzy phi table { a : 0.5, f(b) : 1/3 }  # trailing\n"
      "domain d { a, b, 11 }\n"
      "domain t range 8 12.5\n"
      "clause [C1] p(X) : N sup(Y : d, min(mu(phi, Y), max(0.1, npi(0.7, 0.8))))\n"
      "clause [C2] ~q : P charneg(~p(a))\n");
  EXPECT_EQ(*kb.clauses()[0].label, "C1");
  EXPECT_EQ(kb.clauses()[1].valuation.kind, Measure::Possibility);
  EXPECT_EQ(kb.domains().at("t").hi(), Rational(25, 2));
  EXPECT_EQ(kb.fuzzy("phi")->entries().at(parse_term("f(b)")), Degree(Rational(1, 3)));
}

TEST(ParseKb, NumbersAreCanonical) {
  EXPECT_EQ(parse_term("11.0"), Term::constant("11"));
  EXPECT_EQ(parse_term("0.50"), Term::constant("0.5"));
}

TEST(ParseKb, Errors) {
  auto fails_at = [](const char* text, std::size_t line, std::size_t col) {
    try {
      parse_kb(text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.span().line, line) << e.what();
      EXPECT_EQ(e.span().column, col) << e.what();
      return;
    }
    ADD_FAILURE() << "no error for " << text;
  };
  fails_at("clause p(a) : N 1\nclause p(a,b) : N 1", 2, 8);
  fails_at("clause p : N mu(nope, 1)", 1, 17);
  fails_at("clause p : N 1.5", 1, 14);
  fails_at("clause p $ : N 1", 1, 10);
  fails_at("clause [a] p : N 1\nclause [a] q : N 1", 2, 9);
  fails_at("clause p : Q 1", 1, 12);
  fails_at("clause p : N sup(X : nowhere, 1)", 1, 22);
  fails_at("fuzzy f linear (1,0) (1,1)", 1, 23);
  fails_at("clause p(X : N 1", 1, 12);
  fails_at("clause X : N 1", 1, 8);
}

TEST(ParseKb, ErrorSpansStayInsideInput) {
  std::string base = read_file(data_path("meeting.kb"));
  std::mt19937 rng(7);
  const std::string junk = "()|:~,[]{}#$ Xa1.";
  for (int trial = 0; trial < 400; ++trial) {
    std::string text = base;
    int edits = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < edits; ++e) {
      std::size_t at = rng() % text.size();
      if (rng() % 2)
        text[at] = junk[rng() % junk.size()];
      else
        text.erase(at, 1 + rng() % 4);
    }
    std::vector<std::string> lines;
    std::stringstream ss(text);
    for (std::string l; std::getline(ss, l);) lines.push_back(l);
    try {
      parse_kb(text);
    } catch (const ParseError& e) {
      ASSERT_GE(e.span().line, 1u);
      ASSERT_LE(e.span().line, std::max<std::size_t>(lines.size(), 1));
      const std::string& l = lines.empty() ? std::string() : lines[e.span().line - 1];
      ASSERT_GE(e.span().column, 1u);
      ASSERT_LE(e.span().column + (e.span().length ? e.span().length - 1 : 0),
                std::max<std::size_t>(l.size(), 1))
          << e.what();
    }
  }
}

TEST(ParseGoal, Examples) {
  Goal g = parse_goal("~quiet(m)");
  ASSERT_EQ(g.literals.size(), 1u);
  EXPECT_FALSE(g.literals[0].positive);
  EXPECT_EQ(parse_goal("flies(Tweety)").literals[0].atom.args[0], Term::constant("Tweety"));
  Goal c = parse_goal("p(X) & q(X)");
  ASSERT_EQ(c.literals.size(), 2u);
  EXPECT_EQ(c.literals[0].atom.args[0], c.literals[1].atom.args[0]);
  EXPECT_EQ(c.to_string(), "p(X) & q(X)");
  EXPECT_THROW(parse_goal(""), ParseError);
  EXPECT_THROW(parse_goal("p &"), ParseError);
}

TEST(Serialize, FixturesRoundTrip) {
  for (const char* f : {"meeting.kb", "meeting-updated.kb", "tweety.kb", "tweety-antarctica.kb",
                        "s-min-delta.kb", "empty.kb", "conflict.kb"}) {
    KnowledgeBase kb = load_kb(f);
    std::string text = serialize_kb(kb);
    EXPECT_EQ(parse_kb(text), kb) << f;
    EXPECT_EQ(serialize_kb(parse_kb(text)), text) << f;
  }
}

TEST(Serialize, DeclarationsRoundTrip) {
  KnowledgeBase kb = parse_kb(
      "fuzzy phi table { a : 0.5, f(b) : 1/3 }\n"
      "fuzzy late linear (8,0) (12,1) (14, 0.5)\n"
      "domain d { a, b, 11 }\n"
      "domain t range -1 12.5\n"
      "clause false : N 0.2\n"
      "clause [x1] p(X) | ~r(f(X), 3) : N sup(Y : d, min(mu(phi, Y), npi(0.7, mu(late, X))))\n"
      "clause ~q : P charneg(~p(a))\n");
  EXPECT_EQ(parse_kb(serialize_kb(kb)), kb);
}

TEST(Serialize, RandomBasesRoundTrip) {
  std::mt19937 rng(11);
  const char* preds[] = {"p", "q", "r"};
  const char* terms[] = {"a", "b", "X", "Y", "7", "f(a)", "f(X)"};
  for (int trial = 0; trial < 100; ++trial) {
    std::string text = "fuzzy phi table { a : 0.5 }\n";
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      text += "clause ";
      int lits = static_cast<int>(rng() % 4);
      if (lits == 0) text += "false";
      for (int k = 0; k < lits; ++k) {
        if (k) text += " | ";
        if (rng() % 2) text += "~";
        text += std::string(preds[rng() % 3]) + "(" + terms[rng() % 7] + ")";
      }
      text += rng() % 2 ? " : N " : " : P ";
      text += rng() % 3 ? format_rational(Rational(static_cast<int>(rng() % 11), 10))
                        : std::string("min(0.4, mu(phi, a))");
      text += "\n";
    }
    KnowledgeBase kb = parse_kb(text);
    EXPECT_EQ(parse_kb(serialize_kb(kb)), kb) << text;
  }
}
