#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posres/degree.hpp"
#include "posres/term.hpp"

namespace posres {

// Certainty weight attached to a clause. Immutable; copies share nodes.
//
//   Const    a fixed degree
//   Memb     mu(fn, arg): membership of arg in a declared fuzzy set
//   CharNeg  charneg(L): 1 when literal L is false under the hypothesis
//            assignment, 0 when it is true. charneg(q(X)) is the
//            characteristic function of ~q; charneg(~p(X)) that of p.
//   Min/Max  pointwise combination
//   Sup      sup over a declared domain of a bound variable
//   Gate     npi(a, b): N⊗Π combination, b if a + b > 1 else 0, kept
//            symbolic until both sides are ground
class WeightExpr {
 public:
  enum class Kind { Const, Memb, CharNeg, Min, Max, Sup, Gate };

  WeightExpr();  // Const 0

  static WeightExpr constant(const Degree& d);
  static WeightExpr memb(std::string fn, Term arg);
  static WeightExpr charneg(Literal lit);
  // The combinators fold constants, drop neutral elements, and keep Min and
  // Max flattened, sorted and duplicate-free.
  static WeightExpr min(const WeightExpr& a, const WeightExpr& b);
  static WeightExpr max(const WeightExpr& a, const WeightExpr& b);
  static WeightExpr gate(const WeightExpr& necessity, const WeightExpr& possibility);
  // Returns body unchanged when var does not occur free in it.
  static WeightExpr sup(std::string var, std::string domain, const WeightExpr& body);

  Kind kind() const;
  bool is_const() const { return kind() == Kind::Const; }
  const Degree& value() const;          // Const
  const std::string& name() const;      // Memb: function, Sup: bound variable
  const std::string& domain() const;    // Sup
  const Term& arg() const;              // Memb
  const Literal& literal() const;       // CharNeg
  const WeightExpr& lhs() const;        // Min, Max, Gate
  const WeightExpr& rhs() const;        // Min, Max, Gate
  const WeightExpr& body() const;       // Sup

  std::set<std::string> free_variables() const;
  bool has_free_variable(const std::string& v) const;
  bool contains_charneg() const;
  // Capture-avoiding: bound Sup variables are renamed when a substituted term
  // would otherwise be captured.
  WeightExpr substitute(const Substitution& s) const;
  std::string to_string() const;

  friend bool operator==(const WeightExpr& a, const WeightExpr& b);
  friend std::strong_ordering operator<=>(const WeightExpr& a, const WeightExpr& b);

 private:
  struct Node;
  static WeightExpr combine(Kind kind, const WeightExpr& a, const WeightExpr& b);
  explicit WeightExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// A fuzzy set: piecewise-linear over the reals (constant beyond the first and
// last breakpoints) or a finite table from ground terms to degrees.
class FuzzyDef {
 public:
  enum class Shape { Linear, Table };

  static FuzzyDef linear(std::string name, std::vector<std::pair<Rational, Degree>> points);
  static FuzzyDef table(std::string name, std::map<Term, Degree> entries);

  const std::string& name() const { return name_; }
  Shape shape() const { return shape_; }
  const std::vector<std::pair<Rational, Degree>>& points() const { return points_; }
  const std::map<Term, Degree>& entries() const { return entries_; }

  // Membership of a ground term. Non-numeric terms have membership 0 in a
  // linear set; terms missing from a table have membership 0.
  Degree eval(const Term& arg) const;
  Degree eval_at(const Rational& x) const;  // Linear only
  Degree max_value() const;
  Degree min_value() const;
  std::string to_string() const;  // as a "fuzzy" statement

  friend bool operator==(const FuzzyDef&, const FuzzyDef&) = default;

 private:
  std::string name_;
  Shape shape_ = Shape::Linear;
  std::vector<std::pair<Rational, Degree>> points_;
  std::map<Term, Degree> entries_;
};

class DomainDecl {
 public:
  static DomainDecl finite(std::string name, std::vector<Term> elements);
  static DomainDecl interval(std::string name, Rational lo, Rational hi);

  const std::string& name() const { return name_; }
  bool is_interval() const { return interval_; }
  const std::vector<Term>& elements() const { return elements_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  std::string to_string() const;  // as a "domain" statement

  friend bool operator==(const DomainDecl&, const DomainDecl&) = default;

 private:
  std::string name_;
  bool interval_ = false;
  std::vector<Term> elements_;
  Rational lo_, hi_;
};

// Name of the domain that stands for the Herbrand constants of a base.
inline constexpr const char* kUniverseDomain = "universe";

}  // namespace posres
