#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace posres {

// A first-order term. Variables and constants are told apart by lexical class
// (see is_variable_name); numeric constants hold their canonical decimal text.
class Term {
 public:
  enum class Kind { Variable, Constant, Compound };

  Term() = default;
  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_compound() const { return kind_ == Kind::Compound; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_ground() const;
  bool is_numeric() const;
  void collect_variables(std::set<std::string>& out) const;
  bool contains_variable(const std::string& v) const;
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::Constant;
  std::string name_;
  std::vector<Term> args_;
};

// X, T1, X_7: one uppercase letter followed by digits or underscores.
bool is_variable_name(const std::string& s);

// The part of a variable name before its first underscore ("X_7" -> "X").
std::string variable_base(const std::string& v);

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  std::string to_string() const;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

struct Literal {
  bool positive = true;
  Atom atom;

  Literal negated() const { return Literal{!positive, atom}; }
  bool is_ground() const { return atom.is_ground(); }
  std::string to_string() const;  // "~p(a)" for negative literals
  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

// A set of literals kept sorted and duplicate-free. Empty means the empty clause.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits);

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool is_ground() const;
  bool is_tautology() const;
  bool contains(const Literal& l) const;
  std::set<std::string> variables() const;
  // Number of symbols; used as a fairness measure during saturation.
  std::size_t symbol_count() const;
  // Literals joined by sep, or "[]" / empty_token for the empty clause.
  std::string to_string(const std::string& sep = "|",
                        const std::string& empty_token = "[]") const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> lits_;
};

// Finite map from variable names to terms. Kept idempotent by compose/bind.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& bindings() const { return map_; }
  const Term* find(const std::string& v) const;

  // Adds v -> t, applying it to the existing range so the map stays idempotent.
  void bind(const std::string& v, const Term& t);
  // Unchecked insertion, for renamings and ground bindings.
  void set(const std::string& v, Term t) { map_[v] = std::move(t); }

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  // Variables occurring in the range.
  std::set<std::string> range_variables() const;
  // "X=a,Y=f(b)"
  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Term> map_;
};

}  // namespace posres
