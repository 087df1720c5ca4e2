// Command-line front end: evaluation, conversion, search and proof checking.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hyperknow/hyperknow.hpp"
#include "json.hpp"

using namespace hyperknow;
using json = nlohmann::ordered_json;

namespace {

enum class Exit : int { Ok = 0, Falsified = 1, Usage = 2 };

struct Options {
  std::string format = "text";
  std::string model;
  std::string frame;
  std::string world;
  std::string view;
  std::string agent;
  std::string formula;
  std::string to;
  std::string check;
  std::string name;
  bool safe = false;
  bool spotcheck = false;
  std::size_t cards = 4;
  std::size_t players = 3;
  Bounds bounds;
};

bool machine(const Options& o) { return o.format == "machine"; }

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot read file '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

/// Parses a file, attaching the file name to any error.
template <class F>
auto load(const std::string& path, F parse) {
  const std::string text = read_input(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw Error(e.kind(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.what(), e.span());
  }
}

/// The formula text is named in errors as "--formula".
template <class F>
auto with_formula(F parse) {
  try {
    return parse();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("--formula: ") + e.what(), e.span());
  }
}

void emit(const Options& o, json body, const std::string& text) {
  if (machine(o)) {
    json out;
    out["format_version"] = 1;
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json span_json(const std::optional<SourceSpan>& s) {
  if (!s) return nullptr;
  return json{{"start", s->start}, {"end", s->end}, {"line", s->line}, {"column", s->column}};
}

std::string point_name(const Model& m, const EvalPoint& p) {
  const auto& h = m.hypergraph();
  if (!p.agent) return "world " + h.edge_name(EdgeId(p.index));
  return "view " + m.signature().agent_name(*p.agent) + ":" + h.view_name(*p.agent, ViewId(p.index));
}

json point_json(const Model& m, const EvalPoint& p) {
  const auto& h = m.hypergraph();
  if (!p.agent) return json{{"kind", "world"}, {"name", h.edge_name(EdgeId(p.index))}};
  return json{{"kind", "view"}, {"agent", m.signature().agent_name(*p.agent)}, {"name", h.view_name(*p.agent, ViewId(p.index))}};
}

std::pair<std::string, std::string> split_view(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
    throw Error(ErrorKind::Usage, "--view expects AGENT:VIEW, got '" + spec + "'");
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

// ---------------------------------------------------------------------------

Exit run_check(const Options& o) {
  const Model m = load(o.model, parse_model);
  if (o.world.empty() == o.view.empty()) throw Error(ErrorKind::Usage, "give exactly one of --world or --view");
  bool holds = false;
  json point;
  if (!o.world.empty()) {
    const Formula x = with_formula([&] { return parse_world(o.formula, m.signature()); });
    holds = sat_world(m, o.world, x);
    point = json{{"kind", "world"}, {"name", o.world}};
  } else {
    const auto [agent, view] = split_view(o.view);
    const Formula x = with_formula([&] { return parse_agent(o.formula, agent, m.signature()); });
    holds = sat_agent(m, agent, view, x);
    point = json{{"kind", "view"}, {"agent", agent}, {"name", view}};
  }
  emit(o, json{{"command", "check"}, {"point", point}, {"holds", holds}}, holds ? "true\n" : "false\n");
  return holds ? Exit::Ok : Exit::Falsified;
}

Exit run_valid(const Options& o) {
  const Model m = load(o.model, parse_model);
  const Sort sort = o.agent.empty() ? Sort::world() : Sort::of(o.agent);
  const Formula x = with_formula([&] { return parse_formula(o.formula, sort, m.signature()); });
  const auto failure = first_failure(m, sort, x);
  json body{{"command", "valid"}, {"valid", !failure}};
  body["counterexample"] = failure ? point_json(m, *failure) : json(nullptr);
  emit(o, body, failure ? "not valid: false at " + point_name(m, *failure) + "\n" : "valid\n");
  return failure ? Exit::Falsified : Exit::Ok;
}

Exit run_convert(const Options& o) {
  std::string out;
  if (o.to == "frame") {
    const Model m = load(o.model, parse_model);
    out = render_frame(kappa_model(m));
  } else {
    const PartialEpistemicModel fm = load(o.model, parse_frame);
    out = render_model(eta_model(fm));
  }
  emit(o, json{{"command", "convert"}, {"to", o.to}, {"text", out}}, out);
  return Exit::Ok;
}

void collect_kb4(const Kb4Formula& x, std::vector<std::string>& agents, std::vector<std::string>& atoms) {
  auto add = [](std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  };
  switch (x.kind()) {
    case Kb4Kind::Atom: add(atoms, x.name()); return;
    case Kb4Kind::Knows: add(agents, x.name()); break;
    default: break;
  }
  if (x.lhs()) collect_kb4(x.lhs(), agents, atoms);
  if (x.rhs()) collect_kb4(x.rhs(), agents, atoms);
}

Exit run_translate(const Options& o) {
  Signature sig;
  if (!o.frame.empty()) {
    sig = load(o.frame, parse_frame).signature();
  } else {
    // Signature read off the formula itself.
    detail::FormulaParser p(o.formula);
    const Kb4Formula raw = with_formula([&] { return p.parse_kb4(); });
    std::vector<std::string> agents, atoms;
    collect_kb4(raw, agents, atoms);
    if (agents.empty()) agents.push_back("a");
    sig = Signature(agents, std::vector<std::vector<std::string>>(agents.size()), atoms);
  }
  const Kb4Formula x = with_formula([&] { return parse_kb4(o.formula, sig); });
  const auto enc = o.safe ? KnowledgeEncoding::Safe : KnowledgeEncoding::Unsafe;
  const Formula t = translate(x, enc);
  const std::string text = render(t);
  emit(o, json{{"command", "translate-kb4"}, {"encoding", o.safe ? "safe" : "unsafe"}, {"formula", text}}, text + "\n");
  return Exit::Ok;
}

Exit run_countermodel(const Options& o) {
  o.bounds.validate();
  const Signature sig = default_signature(o.bounds);
  const Sort sort = o.agent.empty() ? Sort::world() : Sort::of(o.agent);
  const Formula x = with_formula([&] { return parse_formula(o.formula, sort, sig); });
  const Verdict v = find_countermodel(x, sort, sig, o.bounds);
  json body{{"command", "countermodel"},
            {"valid_within_bounds", v.valid()},
            {"hypergraphs", v.hypergraphs},
            {"assignments", v.assignments}};
  std::string text;
  if (v.valid()) {
    body["countermodel"] = nullptr;
    text = "valid within bounds (" + std::to_string(v.hypergraphs) + " hypergraphs, " + std::to_string(v.assignments) +
           " assignments)\n";
  } else {
    const auto& cm = *v.countermodel;
    body["countermodel"] = json{{"point", point_json(cm.model, cm.point)}, {"model", render_model(cm.model)}};
    text = "countermodel: false at " + point_name(cm.model, cm.point) + "\n" + render_model(cm.model);
  }
  emit(o, body, text);
  return v.valid() ? Exit::Ok : Exit::Falsified;
}

Exit run_prove(const Options& o) {
  const Derivation d = load(o.check, parse_derivation);
  try {
    check_derivation(d);
  } catch (const CheckError& e) {
    emit(o,
         json{{"command", "prove"}, {"accepted", false}, {"line", e.line()}, {"kind", to_string(e.kind())}, {"message", e.what()},
              {"span", span_json(e.span())}},
         std::string("rejected: ") + e.what() + "\n");
    return Exit::Falsified;
  }
  json body{{"command", "prove"}, {"accepted", true}, {"lines", d.lines.size()}};
  std::string text = "accepted: " + std::to_string(d.lines.size()) + " lines\n";
  if (o.spotcheck) {
    const auto failure = soundness_spotcheck(d, o.bounds);
    body["spotcheck"] = failure ? json{{"line", failure->line}, {"model", render_model(failure->countermodel.model)}}
                                : json("ok");
    if (failure) {
      text += "spot-check failed at line " + std::to_string(failure->line) + "\n" + render_model(failure->countermodel.model);
      emit(o, body, text);
      return Exit::Falsified;
    }
    text += "spot-check ok\n";
  }
  emit(o, body, text);
  return Exit::Ok;
}

Exit run_example(const Options& o) {
  std::string text;
  if (o.name == "shared-memory") {
    text = render_model(shared_memory_example());
  } else {
    text = render_model(example(o.name, ExampleParams{o.cards, o.players}));
  }
  emit(o, json{{"command", "example"}, {"name", o.name}, {"text", text}}, text);
  return Exit::Ok;
}

Exit run_neighborhood(const Options& o) {
  const auto g = load(o.model, [](const std::string& text) {
    if (text.find("mode: generalized") != std::string::npos) return parse_generalized_model(text);
    return as_generalized(parse_model(text));
  });
  const NeighborhoodFrame nf = to_neighborhood(g);
  json hoods = json::object();
  for (std::size_t a = 0; a < nf.agents.size(); ++a) {
    json per = json::object();
    for (std::size_t s = 0; s < nf.states.size(); ++s) {
      json sets = json::array();
      for (const auto& x : nf.neighborhoods[a][s]) {
        json names = json::array();
        for (auto t : x) names.push_back(nf.states[t]);
        sets.push_back(names);
      }
      per[nf.states[s]] = sets;
    }
    hoods[nf.agents[a]] = per;
  }
  emit(o, json{{"command", "neighborhood"}, {"states", nf.states}, {"neighborhoods", hoods}}, render_neighborhood(nf));
  return Exit::Ok;
}

void print_error(const Options& o, const Error& e) {
  if (machine(o)) {
    json out{{"format_version", 1}, {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}, {"span", span_json(e.span())}}}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cerr << "error: " << to_string(e.kind()) << ": " << e.what();
  if (e.span()) std::cerr << " (line " << e.span()->line << ", column " << e.span()->column << ")";
  std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Two-level chromatic hypergraph epistemic logic"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  auto* check = app.add_subcommand("check", "Evaluate a formula at one world or view");
  check->add_option("--model", o.model, "Model file, - for stdin")->required();
  check->add_option("--world", o.world, "Hyperedge name");
  check->add_option("--view", o.view, "AGENT:VIEW");
  check->add_option("--formula", o.formula, "Formula text")->required();

  auto* valid = app.add_subcommand("valid", "Check a formula at every point of a model");
  valid->add_option("--model", o.model, "Model file, - for stdin")->required();
  valid->add_option("--agent", o.agent, "Agent sort (default: world sort)");
  valid->add_option("--formula", o.formula, "Formula text")->required();

  auto* convert = app.add_subcommand("convert", "Convert between hypergraph models and partial epistemic frames");
  convert->add_option("--model", o.model, "Input file, - for stdin")->required();
  convert->add_option("--to", o.to, "Target format")->required()->check(CLI::IsMember({"frame", "hypergraph"}));

  auto* kb4 = app.add_subcommand("translate-kb4", "Translate a KB4 formula into a world formula");
  kb4->add_option("--formula", o.formula, "KB4 formula, K[a] for knowledge")->required();
  kb4->add_option("--frame", o.frame, "Frame file supplying the signature");
  kb4->add_flag("--safe", o.safe, "Translate K[a] as Ksafe[a] instead of K[a]");

  auto* cm = app.add_subcommand("countermodel", "Search for a countermodel within bounds");
  cm->add_option("--formula", o.formula, "Formula over agents a, b, c, atoms p_a, q_a, ..., p, q")->required();
  cm->add_option("--agent", o.agent, "Agent sort (default: world sort)");
  cm->add_option("--agents", o.bounds.agents, "Number of agents");
  cm->add_option("--views", o.bounds.views, "Views per agent");
  cm->add_option("--edges", o.bounds.edges, "Hyperedges");

  auto* prove = app.add_subcommand("prove", "Check a derivation file");
  prove->add_option("--check", o.check, "Derivation file, - for stdin")->required();
  prove->add_flag("--spotcheck", o.spotcheck, "Also sweep every line for validity within default bounds");

  auto* ex = app.add_subcommand("example", "Print a built-in model");
  ex->add_option("name", o.name, "Example name")->required();
  ex->add_option("--cards", o.cards, "card-game: number of cards");
  ex->add_option("--players", o.players, "card-game: number of players");

  auto* hood = app.add_subcommand("neighborhood", "Print the neighborhood frame of a (generalized) model");
  hood->add_option("--model", o.model, "Model file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(Exit::Usage);
  }

  try {
    Exit code = Exit::Ok;
    if (*check) code = run_check(o);
    else if (*valid) code = run_valid(o);
    else if (*convert) code = run_convert(o);
    else if (*kb4) code = run_translate(o);
    else if (*cm) code = run_countermodel(o);
    else if (*prove) code = run_prove(o);
    else if (*ex) code = run_example(o);
    else if (*hood) code = run_neighborhood(o);
    return static_cast<int>(code);
  } catch (const Error& e) {
    print_error(o, e);
  } catch (const std::exception& e) {
    print_error(o, Error(ErrorKind::Usage, e.what()));
  }
  return static_cast<int>(Exit::Usage);
}
