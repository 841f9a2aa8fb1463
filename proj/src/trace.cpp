#include "posres/trace.hpp"

#include <sstream>

#include "posres/parser.hpp"

namespace posres {

namespace {

constexpr std::pair<Rule, const char*> kRuleNames[] = {
    {Rule::Input, "input"}, {Rule::NN, "N⊗N"},     {Rule::NPi, "N⊗Π"},
    {Rule::Factor, "factor"}, {Rule::SupElim, "sup"},
};

constexpr std::pair<SearchStatus, const char*> kStatusNames[] = {
    {SearchStatus::Optimal, "optimal"},
    {SearchStatus::Unverified, "unverified"},
    {SearchStatus::Incomplete, "incomplete"},
};

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::size_t parse_index(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    std::size_t v = std::stoul(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad step number '" + s + "'", {line, 1, 0});
}

Valuation parse_val(std::istringstream& in, std::size_t line) {
  std::string kind, rest;
  in >> kind;
  std::getline(in, rest);
  if (kind.rfind("val=", 0) != 0) throw ParseError("expected val=", {line, 1, 0});
  try {
    return parse_valuation(kind.substr(4) + rest);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), {line, 1, 0});
  }
}

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

const char* status_name(SearchStatus s) {
  for (const auto& [status, name] : kStatusNames)
    if (status == s) return name;
  return "?";
}

std::vector<std::string> ProofTrace::input_labels() const {
  std::vector<std::string> out;
  for (const auto& s : steps)
    if (s.rule == Rule::Input && s.result.label) out.push_back(*s.result.label);
  return out;
}

std::string serialize_step(const ProofStep& s) {
  std::string out = "step " + std::to_string(s.id) + " " + rule_name(s.rule);
  if (s.rule == Rule::Input) out += " label=" + s.result.label.value_or("?");
  if (!s.parents.empty()) {
    out += " parents=";
    for (std::size_t i = 0; i < s.parents.size(); ++i)
      out += (i ? "," : "") + std::to_string(s.parents[i]);
  }
  if (!s.theta.empty()) out += " theta=" + s.theta.to_string();
  out += " clause=" + s.result.clause.to_string() + " val=" + s.result.valuation.to_string();
  return out;
}

std::string serialize_trace(const ProofTrace& t) {
  std::string out;
  for (const auto& s : t.steps) out += serialize_step(s) + "\n";
  out += "RESULT val=" + t.final.to_string() + " " + status_name(t.status) + "\n";
  return out;
}

ProofTrace parse_trace(std::string_view text) {
  ProofTrace t;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool done = false;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (done) throw ParseError("text after RESULT line", {lineno, 1, 0});
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head == "RESULT") {
      // The status word is the last token of the line.
      auto cut = line.find_last_of(' ');
      std::string status = line.substr(cut + 1);
      bool found = false;
      for (const auto& [st, name] : kStatusNames)
        if (status == name) t.status = st, found = true;
      if (!found) throw ParseError("unknown status '" + status + "'", {lineno, cut + 2, 0});
      std::istringstream val(line.substr(7, cut - 7));
      t.final = parse_val(val, lineno);
      done = true;
      continue;
    }
    if (head != "step") throw ParseError("expected 'step' or 'RESULT'", {lineno, 1, 0});
    ProofStep s;
    std::string id, rule;
    in >> id >> rule;
    s.id = parse_index(id, lineno);
    bool known = false;
    for (const auto& [r, name] : kRuleNames)
      if (rule == name) s.rule = r, known = true;
    if (!known) throw ParseError("unknown rule '" + rule + "'", {lineno, 1, 0});
    std::string field;
    while (in >> field) {
      if (field.rfind("label=", 0) == 0) {
        s.result.label = field.substr(6);
      } else if (field.rfind("parents=", 0) == 0) {
        for (const auto& p : split_top_level(field.substr(8)))
          s.parents.push_back(parse_index(p, lineno));
      } else if (field.rfind("theta=", 0) == 0) {
        for (const auto& b : split_top_level(field.substr(6))) {
          auto eq = b.find('=');
          if (eq == std::string::npos) throw ParseError("bad binding '" + b + "'", {lineno, 1, 0});
          s.theta.set(b.substr(0, eq), parse_term(b.substr(eq + 1)));
        }
      } else if (field.rfind("clause=", 0) == 0) {
        s.result.clause = parse_clause(field.substr(7));
        s.result.valuation = parse_val(in, lineno);
        break;
      } else {
        throw ParseError("unknown field '" + field + "'", {lineno, 1, 0});
      }
    }
    for (std::size_t p : s.parents)
      if (p >= s.id) throw ParseError("parent does not precede its child", {lineno, 1, 0});
    t.steps.push_back(std::move(s));
  }
  if (!done) throw ParseError("missing RESULT line", {lineno ? lineno : 1, 1, 0});
  return t;
}

}  // namespace posres
