#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posres/kb.hpp"

namespace posres {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t length = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Conjunction of literals; free variables are existential.
struct Goal {
  std::vector<Literal> literals;

  std::string to_string() const;  // "p(X) & q(X)"
};

// Knowledge-base text format:
//
//   file        := { stmt }
//   stmt        := clause_stmt | fuzzy_stmt | domain_stmt
//   clause_stmt := "clause" [ "[" label "]" ] ( lits | "false" ) ":" weight
//   lits        := literal { "|" literal }
//   literal     := [ "~" ] atom
//   atom        := ident [ "(" term { "," term } ")" ]
//   term        := VAR | ident | number | ident "(" term { "," term } ")"
//   weight      := ( "N" | "P" ) wexpr
//   wexpr       := number | "mu" "(" ident "," term ")"
//                | "min" "(" wexpr "," wexpr ")" | "max" "(" wexpr "," wexpr ")"
//                | "npi" "(" wexpr "," wexpr ")"
//                | "sup" "(" VAR ":" ident "," wexpr ")" | "charneg" "(" literal ")"
//   fuzzy_stmt  := "fuzzy" ident ( "linear" point point { point }
//                                | "table" "{" term ":" number { "," term ":" number } "}" )
//   point       := "(" number "," number ")"
//   domain_stmt := "domain" ident ( "{" elem { "," elem } "}" | "range" number number )
//
// "#" starts a comment. Variables are one uppercase letter followed by digits
// or underscores (X, T1, X_7); any other identifier is a constant or symbol.
// Numbers are exact decimals or p/q.
KnowledgeBase parse_kb(std::string_view text);
Goal parse_goal(std::string_view text);
Literal parse_literal(std::string_view text);
Atom parse_atom(std::string_view text);
Term parse_term(std::string_view text);
// "N 0.6", "P min(0.6,mu(late,T))"
Valuation parse_valuation(std::string_view text);
// "a|~b(X)" or "[]"
Clause parse_clause(std::string_view text);

// Inverse of parse_kb up to comments and formatting.
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace posres
