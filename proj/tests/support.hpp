#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "posres/parser.hpp"

namespace posres {

inline void PrintTo(const Degree& d, std::ostream* os) { *os << d.to_string(); }
inline void PrintTo(const Valuation& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const WeightExpr& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const Clause& c, std::ostream* os) { *os << c.to_string(); }

}  // namespace posres

namespace posres::testing {

inline std::string data_path(const std::string& name) {
  return std::string(POSRES_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline KnowledgeBase load_kb(const std::string& name) { return parse_kb(read_file(data_path(name))); }

inline Degree deg(const char* s) { return Degree::parse(s); }
inline Valuation val(const char* s) { return parse_valuation(s); }

inline WeightedClause wclause(const char* lits, const char* v) {
  return {parse_clause(lits), parse_valuation(v), std::nullopt};
}

}  // namespace posres::testing
