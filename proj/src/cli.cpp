#include "posres/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "posres/hypotheses.hpp"
#include "posres/revision.hpp"

namespace posres {

namespace {

struct Options {
  std::string kb_path;
  std::string goal;
  std::string engine = "cut";
  std::size_t max_steps = 100000;
  std::size_t max_depth = 64;
  bool trace = false;
  bool all = false;
  bool validate = false;
  bool semantic = false;
  std::vector<std::string> hyps;
  std::vector<std::string> assumes;
};

class InputError : public Error {
 public:
  using Error::Error;
};

KnowledgeBase load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_kb(ss.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Goal goal_of(const std::string& text) {
  try {
    return parse_goal(text);
  } catch (const ParseError& e) {
    throw InputError("goal:" + std::string(e.what()));
  }
}

SearchConfig config_of(const Options& o) {
  SearchConfig c;
  c.engine = o.engine == "bestfirst" ? SearchConfig::Engine::BestFirst
                                     : SearchConfig::Engine::AlphaCut;
  c.max_steps = o.max_steps;
  c.max_depth = o.max_depth;
  c.collect_all_refutations = o.all;
  return c;
}

std::string result_line(const std::optional<Valuation>& v, SearchStatus s) {
  return std::string("RESULT ") + (v ? "val=" + v->to_string() : std::string("none")) + " " +
         status_name(s) + "\n";
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

int cmd_prove(const Options& o, std::ostream& out) {
  KnowledgeBase kb = load(o.kb_path);
  Goal goal = goal_of(o.goal);
  SearchConfig cfg = config_of(o);
  IncRoute route = o.semantic ? IncRoute::Semantic : IncRoute::Refutation;
  QueryVerdict v;
  RefutationResult r;
  if (o.validate) {
    v = query(kb, goal, cfg, route);
    r.best = v.best;
    r.trace = v.trace;
    r.status = v.status;
    if (o.all) r = refute(kb, goal, cfg);
  } else {
    r = refute(kb, goal, cfg);
  }
  if (o.trace) {
    if (o.all) {
      for (const auto& t : r.all) out << serialize_trace(t);
    } else if (r.trace) {
      for (const auto& s : r.trace->steps) out << serialize_step(s) << "\n";
    }
  } else if (o.all) {
    for (const auto& t : r.all) out << "REFUTATION val=" << t.final.to_string() << "\n";
  }
  out << result_line(r.best, r.status);
  if (o.validate) {
    out << "beta=" << v.beta.to_string() << " inc=" << v.inc.to_string()
        << " valid=" << (v.valid ? "true" : "false") << " support=" << join(v.support, ",")
        << "\n";
  }
  if (r.status == SearchStatus::Incomplete) return kExitLimit;
  if (!r.best) return kExitNotEstablished;
  if (o.validate && !v.valid) return kExitNotEstablished;
  return kExitOk;
}

int cmd_consistency(const Options& o, std::ostream& out) {
  KnowledgeBase kb = load(o.kb_path);
  Degree inc = inconsistency_degree(kb, o.semantic ? IncRoute::Semantic : IncRoute::Refutation,
                                    config_of(o));
  out << "Inc=" << inc.to_string() << " c=" << inc.dual().to_string() << "\n";
  return kExitOk;
}

int cmd_extensions(const Options& o, std::ostream& out) {
  KnowledgeBase kb = load(o.kb_path);
  for (const auto& e : preferred_extensions(kb)) {
    std::vector<std::string> dropped;
    for (const auto& d : e.dropped) dropped.push_back(d.to_string());
    out << e.consequences_string() << " rank=" << e.rank + 1 << " kept=" << join(e.labels, ",")
        << " dropped=" << join(dropped, ",") << "\n";
  }
  return kExitOk;
}

int cmd_hypothesize(const Options& o, std::ostream& out) {
  KnowledgeBase kb = load(o.kb_path);
  Goal goal = goal_of(o.goal);
  HypothesisSet h;
  for (const auto& p : o.hyps) {
    try {
      h.patterns.push_back(parse_atom(p));
    } catch (const ParseError& e) {
      throw InputError("--hyp " + p + ": " + e.what());
    }
  }
  for (const auto& a : o.assumes) {
    auto eq = a.rfind('=');
    std::string value = eq == std::string::npos ? "" : a.substr(eq + 1);
    if (value != "true" && value != "false")
      throw InputError("--assume expects atom=true or atom=false, got '" + a + "'");
    try {
      h.assignment[parse_atom(a.substr(0, eq))] = value == "true";
    } catch (const ParseError& e) {
      throw InputError("--assume " + a + ": " + e.what());
    }
  }
  ConditionalAnswer ans = hypothesize(kb, h, goal, config_of(o));
  for (std::size_t i = 0; i < ans.alternatives.size(); ++i) {
    out << "ALTERNATIVE val=" << ans.alternatives[i].to_string() << "\n";
    if (o.trace) out << serialize_trace(ans.traces[i]);
  }
  out << "ANSWER " << (ans.value ? "val=" + ans.value->to_string() : std::string("none")) << "\n";
  if (ans.status == SearchStatus::Incomplete) return kExitLimit;
  return ans.value ? kExitOk : kExitNotEstablished;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Possibilistic resolution prover"};
  app.require_subcommand(1);
  Options o;

  auto search_flags = [&](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "Search engine")
        ->check(CLI::IsMember({"cut", "bestfirst"}));
    sub->add_option("--max-steps", o.max_steps, "Resolvent budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-depth", o.max_depth, "Derivation depth limit")
        ->check(CLI::PositiveNumber);
  };

  auto* prove = app.add_subcommand("prove", "Refute the negated goal and report the best valuation");
  prove->add_option("kb", o.kb_path, "Knowledge base file")->required();
  prove->add_option("goal", o.goal, "Goal, e.g. \"~quiet(m)\"")->required();
  search_flags(prove);
  prove->add_flag("--trace", o.trace, "Print the proof trace");
  prove->add_flag("--all-refutations", o.all, "Report one refutation per valuation found");
  prove->add_flag("--validate", o.validate, "Compare the result with the inconsistency degree");
  prove->add_flag("--semantic", o.semantic, "Compute the inconsistency degree by enumeration");

  auto* cons = app.add_subcommand("consistency", "Print the inconsistency degree");
  cons->add_option("kb", o.kb_path, "Knowledge base file")->required();
  search_flags(cons);
  cons->add_flag("--semantic", o.semantic, "Enumerate interpretations instead of refuting");

  auto* ext = app.add_subcommand("extensions", "Rank the maximal consistent sub-bases");
  ext->add_option("kb", o.kb_path, "Knowledge base file")->required();

  auto* hyp = app.add_subcommand("hypothesize", "Answer a goal under hypothesis atoms");
  hyp->add_option("kb", o.kb_path, "Knowledge base file")->required();
  hyp->add_option("goal", o.goal, "Goal")->required();
  search_flags(hyp);
  hyp->add_option("--hyp", o.hyps, "Hypothesis pattern, e.g. \"comes(Bob,X)\"");
  hyp->add_option("--assume", o.assumes, "Fix a hypothesis atom, e.g. \"comes(Bob,m)=true\"");
  hyp->add_flag("--trace", o.trace, "Print the trace of every alternative");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*prove) return cmd_prove(o, out);
    if (*cons) return cmd_consistency(o, out);
    if (*ext) return cmd_extensions(o, out);
    return cmd_hypothesize(o, out);
  } catch (const SearchLimitError& e) {
    err << "posres: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    err << "posres: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace posres
