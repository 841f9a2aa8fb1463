#include "posres/parser.hpp"

#include <cctype>
#include <map>
#include <set>

namespace posres {

ParseError::ParseError(const std::string& message, SourceSpan span)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span) {}

std::string Goal::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += " & ";
    out += literals[i].to_string();
  }
  return out;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End } kind = Kind::End;
  std::string text;
  SourceSpan span;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  SourceSpan last{1, 1, 0};
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.span = {line, col, 1};
    std::size_t start = i;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(text.substr(start, j - start));
    } else if (is_digit(c) || ((c == '-' || c == '.') && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && (is_digit(text[j]) || text[j] == '.' ||
                                 (text[j] == '/' && j + 1 < text.size() && is_digit(text[j + 1]))))
        ++j;
      t.kind = Token::Kind::Number;
      t.text = std::string(text.substr(start, j - start));
    } else if (std::string_view("(),|~:{}[]&=").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, c);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", t.span);
    }
    t.span.length = t.text.size();
    last = t.span;
    advance(t.text.size());
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.span = last.length ? SourceSpan{last.line, last.column + last.length - 1, 0}
                         : SourceSpan{1, 1, 0};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  KnowledgeBase file() {
    KnowledgeBase kb;
    std::set<std::string> labels;
    while (!at_end()) {
      const Token& t = peek();
      if (is_keyword("clause")) {
        next();
        kb.add_clause(clause_stmt(labels));
      } else if (is_keyword("fuzzy")) {
        next();
        Token name = expect_ident("fuzzy set name");
        if (kb.fuzzy(name.text)) throw ParseError("fuzzy set '" + name.text + "' declared twice", name.span);
        kb.add_fuzzy(fuzzy_body(name));
      } else if (is_keyword("domain")) {
        next();
        Token name = expect_ident("domain name");
        if (kb.domains().count(name.text))
          throw ParseError("domain '" + name.text + "' declared twice", name.span);
        kb.add_domain(domain_body(name));
      } else {
        throw ParseError("expected 'clause', 'fuzzy' or 'domain' but found " + describe(t), t.span);
      }
    }
    for (const auto& [name, span] : fuzzy_refs_)
      if (!kb.fuzzy(name)) throw ParseError("undeclared fuzzy set '" + name + "'", span);
    for (const auto& [name, span] : domain_refs_)
      if (!kb.domains().count(name) && name != kUniverseDomain)
        throw ParseError("undeclared domain '" + name + "'", span);
    return kb;
  }

  Goal goal() {
    Goal g;
    g.literals.push_back(literal());
    while (accept("&")) g.literals.push_back(literal());
    return g;
  }

  Literal literal() {
    bool positive = !accept("~");
    return Literal{positive, atom()};
  }

  Atom atom() {
    Token name = expect_ident("predicate");
    if (is_variable_name(name.text))
      throw ParseError("predicate expected but found variable '" + name.text + "'", name.span);
    Atom a{name.text, {}};
    if (accept("(")) a.args = term_list();
    check_arity(pred_arity_, "predicate", a.predicate, a.args.size(), name.span);
    return a;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) return Term::constant(number_text(next()));
    Token name = expect_ident("term");
    if (is_variable_name(name.text)) return Term::variable(name.text);
    if (accept("(")) {
      auto args = term_list();
      check_arity(fn_arity_, "function symbol", name.text, args.size(), name.span);
      return Term::compound(name.text, std::move(args));
    }
    return Term::constant(name.text);
  }

  Valuation valuation() {
    Token k = expect_ident("'N' or 'P'");
    Measure kind;
    if (k.text == "N") kind = Measure::Necessity;
    else if (k.text == "P") kind = Measure::Possibility;
    else throw ParseError("expected 'N' or 'P' but found '" + k.text + "'", k.span);
    return {kind, wexpr()};
  }

  Clause clause_body() {
    if (accept("[")) {
      expect("]");
      return Clause();
    }
    if (is_keyword("false")) {
      next();
      return Clause();
    }
    std::vector<Literal> lits{literal()};
    while (accept("|")) lits.push_back(literal());
    return Clause(std::move(lits));
  }

  void expect_end() {
    if (!at_end()) throw ParseError("unexpected " + describe(peek()), peek().span);
  }

 private:
  WeightedClause clause_stmt(std::set<std::string>& labels) {
    WeightedClause wc;
    if (accept("[")) {
      const Token& t = peek();
      if (t.kind != Token::Kind::Ident && t.kind != Token::Kind::Number)
        throw ParseError("expected clause label but found " + describe(t), t.span);
      Token label = next();
      if (!labels.insert(label.text).second)
        throw ParseError("duplicate clause label '" + label.text + "'", label.span);
      wc.label = label.text;
      expect("]");
    }
    wc.clause = clause_body();
    expect(":");
    wc.valuation = valuation();
    return wc;
  }

  WeightExpr wexpr() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) return WeightExpr::constant(degree(next()));
    Token head = expect_ident("weight expression");
    if (head.text == "mu") {
      expect("(");
      Token fn = expect_ident("fuzzy set name");
      fuzzy_refs_.emplace_back(fn.text, fn.span);
      expect(",");
      Term arg = term();
      expect(")");
      return WeightExpr::memb(fn.text, std::move(arg));
    }
    if (head.text == "min" || head.text == "max" || head.text == "npi") {
      expect("(");
      WeightExpr a = wexpr();
      expect(",");
      WeightExpr b = wexpr();
      expect(")");
      if (head.text == "min") return WeightExpr::min(a, b);
      if (head.text == "max") return WeightExpr::max(a, b);
      return WeightExpr::gate(a, b);
    }
    if (head.text == "sup") {
      expect("(");
      Token var = expect_ident("variable");
      if (!is_variable_name(var.text))
        throw ParseError("sup expects a variable but found '" + var.text + "'", var.span);
      expect(":");
      Token dom = expect_ident("domain name");
      domain_refs_.emplace_back(dom.text, dom.span);
      expect(",");
      WeightExpr body = wexpr();
      expect(")");
      return WeightExpr::sup(var.text, dom.text, body);
    }
    if (head.text == "charneg") {
      expect("(");
      Literal lit = literal();
      expect(")");
      return WeightExpr::charneg(std::move(lit));
    }
    throw ParseError("unknown weight expression '" + head.text + "'", head.span);
  }

  FuzzyDef fuzzy_body(const Token& name) {
    Token shape = expect_ident("'linear' or 'table'");
    if (shape.text == "linear") {
      std::vector<std::pair<Rational, Degree>> points;
      while (peek().kind == Token::Kind::Punct && peek().text == "(") {
        next();
        Token x = expect_number();
        expect(",");
        Token y = expect_number();
        expect(")");
        Rational xv = rational(x);
        if (!points.empty() && !(points.back().first < xv))
          throw ParseError("breakpoints must be strictly increasing", x.span);
        points.emplace_back(xv, degree(y));
      }
      if (points.size() < 2) throw ParseError("a linear fuzzy set needs at least two points", name.span);
      return FuzzyDef::linear(name.text, std::move(points));
    }
    if (shape.text == "table") {
      std::map<Term, Degree> entries;
      expect("{");
      do {
        Token at = peek();
        Term key = term();
        if (!key.is_ground()) throw ParseError("table keys must be ground", at.span);
        expect(":");
        entries[key] = degree(expect_number());
      } while (accept(","));
      expect("}");
      return FuzzyDef::table(name.text, std::move(entries));
    }
    throw ParseError("expected 'linear' or 'table' but found '" + shape.text + "'", shape.span);
  }

  DomainDecl domain_body(const Token& name) {
    if (accept("{")) {
      std::vector<Term> elems;
      do {
        Token at = peek();
        Term e = term();
        if (!e.is_ground()) throw ParseError("domain elements must be ground", at.span);
        elems.push_back(std::move(e));
      } while (accept(","));
      expect("}");
      return DomainDecl::finite(name.text, std::move(elems));
    }
    if (is_keyword("range")) {
      next();
      Token lo = expect_number();
      Token hi = expect_number();
      Rational l = rational(lo), h = rational(hi);
      if (h < l) throw ParseError("empty range", hi.span);
      return DomainDecl::interval(name.text, l, h);
    }
    throw ParseError("expected '{' or 'range' but found " + describe(peek()), peek().span);
  }

  std::vector<Term> term_list() {
    std::vector<Term> args{term()};
    while (accept(",")) args.push_back(term());
    expect(")");
    return args;
  }

  void check_arity(std::map<std::string, std::size_t>& seen, const char* what,
                   const std::string& name, std::size_t arity, const SourceSpan& span) {
    auto [it, fresh] = seen.emplace(name, arity);
    if (!fresh && it->second != arity)
      throw ParseError(std::string("arity clash: ") + what + " '" + name + "' used with " +
                           std::to_string(it->second) + " and " + std::to_string(arity) +
                           " arguments",
                       span);
  }

  Rational rational(const Token& t) {
    try {
      return parse_rational(t.text);
    } catch (const Error& e) {
      throw ParseError(e.what(), t.span);
    }
  }

  Degree degree(const Token& t) {
    Rational r = rational(t);
    if (r < 0 || r > 1) throw ParseError("degree " + t.text + " outside [0,1]", t.span);
    return Degree(r);
  }

  std::string number_text(const Token& t) { return format_rational(rational(t)); }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  bool is_keyword(const char* kw) const {
    return peek().kind == Token::Kind::Ident && peek().text == kw;
  }

  bool accept(const char* punct) {
    if (peek().kind == Token::Kind::Punct && peek().text == punct) {
      next();
      return true;
    }
    return false;
  }

  void expect(const char* punct) {
    if (!accept(punct))
      throw ParseError(std::string("expected '") + punct + "' but found " + describe(peek()),
                       peek().span);
  }

  Token expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident)
      throw ParseError(std::string("expected ") + what + " but found " + describe(peek()),
                       peek().span);
    return next();
  }

  Token expect_number() {
    if (peek().kind != Token::Kind::Number)
      throw ParseError("expected number but found " + describe(peek()), peek().span);
    return next();
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? std::string("end of input") : "'" + t.text + "'";
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> pred_arity_;
  std::map<std::string, std::size_t> fn_arity_;
  std::vector<std::pair<std::string, SourceSpan>> fuzzy_refs_;
  std::vector<std::pair<std::string, SourceSpan>> domain_refs_;
};

template <typename F>
auto parse_whole(std::string_view text, F&& f) {
  Parser p(text);
  auto result = f(p);
  p.expect_end();
  return result;
}

}  // namespace

KnowledgeBase parse_kb(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.file(); });
}
Goal parse_goal(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.goal(); });
}
Literal parse_literal(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.literal(); });
}
Atom parse_atom(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.atom(); });
}
Term parse_term(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.term(); });
}
Valuation parse_valuation(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.valuation(); });
}
Clause parse_clause(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.clause_body(); });
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& [name, f] : kb.fuzzy_defs()) out += f.to_string() + "\n";
  for (const auto& [name, d] : kb.domains()) out += d.to_string() + "\n";
  for (const auto& wc : kb.clauses()) {
    out += "clause ";
    if (wc.label) out += "[" + *wc.label + "] ";
    out += wc.clause.to_string(" | ", "false") + " : " + wc.valuation.to_string() + "\n";
  }
  return out;
}

}  // namespace posres
