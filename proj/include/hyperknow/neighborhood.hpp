#ifndef HYPERKNOW_NEIGHBORHOOD_HPP
#define HYPERKNOW_NEIGHBORHOOD_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hyperknow/core.hpp"
#include "hyperknow/formula.hpp"
#include "hyperknow/parser.hpp"
#include "hyperknow/semantics.hpp"

namespace hyperknow {

/// A chromatic hypergraph model whose projection is a relation: an edge may
/// contain several views of one agent.
class GeneralizedModel {
 public:
  using Incidence = std::vector<std::vector<std::vector<ViewId>>>;  // [edge][agent] -> views

  static GeneralizedModel create(Signature sig, std::vector<std::vector<std::string>> view_names,
                                 std::vector<std::string> edge_names, Incidence incidence, Valuation val) {
    auto problems = violations(sig, view_names, edge_names, incidence);
    if (problems.empty()) {
      // Valuation shapes are checked against an incidence-free stand-in.
      for (std::size_t a = 0; a < sig.agent_count(); ++a)
        if (a >= val.agent.size() || val.agent[a].size() != sig.agent_atoms(AgentId(a)).size()) {
          problems.emplace_back("valuation", "valuation of agent " + sig.agent_name(AgentId(a)) + " does not match its atoms");
        } else {
          for (const auto& row : val.agent[a])
            if (row.size() != view_names[a].size())
              problems.emplace_back("valuation", "agent atom extension does not match the views of " + sig.agent_name(AgentId(a)));
        }
      if (val.env.size() != sig.env_atoms().size()) problems.emplace_back("valuation", "environment valuation does not match AP_e");
      for (const auto& row : val.env)
        if (row.size() != edge_names.size()) problems.emplace_back("valuation", "environment atom extension does not match the edges");
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return GeneralizedModel(std::move(sig), std::move(view_names), std::move(edge_names), std::move(incidence), std::move(val));
  }

  static std::vector<Violation> violations(const Signature& sig, const std::vector<std::vector<std::string>>& view_names,
                                           const std::vector<std::string>& edge_names, const Incidence& incidence) {
    std::vector<Violation> out;
    if (view_names.size() != sig.agent_count() || incidence.size() != edge_names.size()) {
      out.emplace_back("shape", "tables do not match the signature");
      return out;
    }
    std::vector<std::vector<bool>> hit(sig.agent_count());
    for (std::size_t a = 0; a < sig.agent_count(); ++a) hit[a].assign(view_names[a].size(), false);
    for (std::size_t e = 0; e < edge_names.size(); ++e) {
      if (incidence[e].size() != sig.agent_count()) {
        out.emplace_back("shape", "edge " + edge_names[e] + " has an incidence row of the wrong size");
        continue;
      }
      bool any = false;
      for (std::size_t a = 0; a < sig.agent_count(); ++a)
        for (auto v : incidence[e][a]) {
          if (v.index() >= view_names[a].size()) {
            out.emplace_back("color discipline", "edge " + edge_names[e] + " contains a view outside V_" + sig.agent_name(AgentId(a)));
            continue;
          }
          hit[a][v.index()] = any = true;
        }
      if (!any) out.emplace_back("non-emptiness", "edge " + edge_names[e] + " has no alive agent");
    }
    for (std::size_t a = 0; a < sig.agent_count(); ++a)
      for (std::size_t v = 0; v < hit[a].size(); ++v)
        if (!hit[a][v])
          out.emplace_back("surjectivity", "view " + view_names[a][v] + " of agent " + sig.agent_name(AgentId(a)) + " lies in no edge");
    return out;
  }

  const Signature& signature() const { return sig_; }
  std::size_t agent_count() const { return sig_.agent_count(); }
  std::size_t edge_count() const { return edge_names_.size(); }
  std::size_t view_count(AgentId a) const { return view_names_.at(a.index()).size(); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e.index()); }
  const std::string& view_name(AgentId a, ViewId v) const { return view_names_.at(a.index()).at(v.index()); }
  const std::vector<std::string>& edge_names() const { return edge_names_; }
  const std::vector<std::vector<std::string>>& view_names() const { return view_names_; }
  const std::vector<ViewId>& views_of(EdgeId e, AgentId a) const { return incidence_.at(e.index()).at(a.index()); }
  const std::vector<EdgeId>& fiber(AgentId a, ViewId v) const { return fibers_.at(a.index()).at(v.index()); }
  const Incidence& incidence() const { return incidence_; }
  const Valuation& valuation() const { return val_; }

  bool is_functional() const {
    for (const auto& row : incidence_)
      for (const auto& vs : row)
        if (vs.size() > 1) return false;
    return true;
  }

  std::optional<EdgeId> find_edge(std::string_view name) const {
    for (std::size_t e = 0; e < edge_names_.size(); ++e)
      if (edge_names_[e] == name) return EdgeId(e);
    return std::nullopt;
  }
  std::optional<ViewId> find_view(AgentId a, std::string_view name) const {
    const auto& names = view_names_.at(a.index());
    for (std::size_t v = 0; v < names.size(); ++v)
      if (names[v] == name) return ViewId(v);
    return std::nullopt;
  }

 private:
  GeneralizedModel(Signature sig, std::vector<std::vector<std::string>> view_names, std::vector<std::string> edge_names,
                   Incidence incidence, Valuation val)
      : sig_(std::move(sig)),
        view_names_(std::move(view_names)),
        edge_names_(std::move(edge_names)),
        incidence_(std::move(incidence)),
        val_(std::move(val)) {
    fibers_.resize(sig_.agent_count());
    for (std::size_t a = 0; a < sig_.agent_count(); ++a) fibers_[a].resize(view_names_[a].size());
    for (std::size_t e = 0; e < incidence_.size(); ++e) {
      for (std::size_t a = 0; a < sig_.agent_count(); ++a) {
        auto& vs = incidence_[e][a];
        std::sort(vs.begin(), vs.end());
        for (auto v : vs) fibers_[a][v.index()].push_back(EdgeId(e));
      }
    }
  }

  Signature sig_;
  std::vector<std::vector<std::string>> view_names_;
  std::vector<std::string> edge_names_;
  Incidence incidence_;
  Valuation val_;
  std::vector<std::vector<std::vector<EdgeId>>> fibers_;
};

/// Builds a generalized model from a declaration list; accepts files in
/// either mode.
inline GeneralizedModel build_generalized(const RawModel& raw) {
  auto r = detail::resolve_raw(raw);
  if (!r.problems.empty()) throw ValidationError(std::move(r.problems));
  return GeneralizedModel::create(raw.sig, std::move(r.view_names), std::move(r.edge_names), std::move(r.incidence),
                                  std::move(r.val));
}

inline GeneralizedModel parse_generalized_model(std::string_view text) { return build_generalized(parse_raw_model(text)); }

inline GeneralizedModel as_generalized(const Model& m) {
  const auto& h = m.hypergraph();
  GeneralizedModel::Incidence inc(h.edge_count(), std::vector<std::vector<ViewId>>(h.agent_count()));
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (std::size_t a = 0; a < h.agent_count(); ++a)
      if (auto v = h.proj(EdgeId(e), AgentId(a))) inc[e][a].push_back(*v);
  return GeneralizedModel::create(m.signature(), h.view_names(), h.edge_names(), std::move(inc), m.valuation());
}

inline RawModel to_raw(const GeneralizedModel& g) {
  RawModel raw;
  const auto& sig = g.signature();
  raw.sig = sig;
  raw.generalized = !g.is_functional();
  for (std::size_t a = 0; a < sig.agent_count(); ++a) {
    const auto& atoms = sig.agent_atoms(AgentId(a));
    for (std::size_t v = 0; v < g.view_count(AgentId(a)); ++v) {
      RawView rv{sig.agent_name(AgentId(a)), g.view_name(AgentId(a), ViewId(v)), {}, std::nullopt};
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (g.valuation().agent[a][i][v]) rv.atoms.push_back(atoms[i]);
      raw.views.push_back(std::move(rv));
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    RawEdge re{g.edge_name(EdgeId(e)), {}, {}, std::nullopt};
    for (std::size_t a = 0; a < sig.agent_count(); ++a)
      for (auto v : g.views_of(EdgeId(e), AgentId(a)))
        re.members.push_back({sig.agent_name(AgentId(a)), g.view_name(AgentId(a), v), std::nullopt});
    for (std::size_t i = 0; i < sig.env_atoms().size(); ++i)
      if (g.valuation().env[i][e]) re.env_atoms.push_back(sig.env_atoms()[i]);
    raw.edges.push_back(std::move(re));
  }
  return raw;
}

inline std::string render_model(const GeneralizedModel& g) { return render_model(to_raw(g)); }

/// Two processes over a two-cell memory (x_L, x_R). View <agent><cell><bit>
/// lies in edge s<x_L><x_R> iff x_cell = bit, so each edge holds two views
/// per agent. Atoms reads<bit>_<agent> mark the bit a view reads; L1 and R1
/// mark the cells holding 1.
inline GeneralizedModel shared_memory_example() {
  RawModel raw;
  raw.sig = Signature({"a", "b"}, {{"reads0_a", "reads1_a"}, {"reads0_b", "reads1_b"}}, {"L1", "R1"});
  raw.generalized = true;
  for (const char* a : {"a", "b"})
    for (const char* cell : {"L", "R"})
      for (const char* bit : {"0", "1"})
        raw.views.push_back({a, std::string(a) + cell + bit, {std::string("reads") + bit + "_" + a}, std::nullopt});
  for (int xl = 0; xl < 2; ++xl)
    for (int xr = 0; xr < 2; ++xr) {
      RawEdge edge{"s" + std::to_string(xl) + std::to_string(xr), {}, {}, std::nullopt};
      for (const char* a : {"a", "b"}) {
        edge.members.push_back({a, std::string(a) + "L" + std::to_string(xl), std::nullopt});
        edge.members.push_back({a, std::string(a) + "R" + std::to_string(xr), std::nullopt});
      }
      if (xl) edge.env_atoms.push_back("L1");
      if (xr) edge.env_atoms.push_back("R1");
      raw.edges.push_back(std::move(edge));
    }
  return build_generalized(raw);
}

// ---------------------------------------------------------------------------
// Neighborhood frames

struct NeighborhoodFrame {
  std::vector<std::string> agents;
  std::vector<std::string> states;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> neighborhoods;  // [agent][state] -> sorted subsets

  /// Every state belongs to each of its neighborhoods.
  bool has_membership_property() const {
    for (const auto& per_agent : neighborhoods)
      for (std::size_t s = 0; s < per_agent.size(); ++s)
        for (const auto& x : per_agent[s])
          if (!std::binary_search(x.begin(), x.end(), s)) return false;
    return true;
  }

  friend bool operator==(const NeighborhoodFrame&, const NeighborhoodFrame&) = default;
};

/// S = edges; N_a(e) = { fiber(v) | v an a-view of e }.
inline NeighborhoodFrame to_neighborhood(const GeneralizedModel& g) {
  NeighborhoodFrame nf;
  nf.agents = g.signature().agents();
  nf.states = g.edge_names();
  nf.neighborhoods.resize(g.agent_count());
  for (std::size_t a = 0; a < g.agent_count(); ++a) {
    nf.neighborhoods[a].resize(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto& hood = nf.neighborhoods[a][e];
      for (auto v : g.views_of(EdgeId(e), AgentId(a))) {
        std::vector<std::size_t> x;
        for (auto u : g.fiber(AgentId(a), v)) x.push_back(u.index());
        hood.push_back(std::move(x));
      }
      std::sort(hood.begin(), hood.end());
      hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
    }
  }
  return nf;
}

inline std::string render_neighborhood(const NeighborhoodFrame& nf) {
  std::string out = "states: " + detail::join_names(nf.states) + "\n";
  for (std::size_t a = 0; a < nf.agents.size(); ++a)
    for (std::size_t s = 0; s < nf.states.size(); ++s) {
      out += "N[" + nf.agents[a] + "](" + nf.states[s] + ") = {";
      const auto& hood = nf.neighborhoods[a][s];
      for (std::size_t i = 0; i < hood.size(); ++i) {
        std::vector<std::string> names;
        for (auto t : hood[i]) names.push_back(nf.states[t]);
        out += (i ? ", {" : "{") + detail::join_names(names) + "}";
      }
      out += "}\n";
    }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation over the incidence relation

class GeneralizedEvaluator {
 public:
  explicit GeneralizedEvaluator(const GeneralizedModel& g) : g_(g) {}

  /// Extension of a sort-checked formula; sort 0 is edges, a + 1 the views of
  /// agent a.
  std::vector<bool> extension(const Formula& x, std::size_t sort) {
    const Formula core = desugar(x);
    return eval(core, sort);
  }

 private:
  std::vector<bool> eval(const Formula& x, std::size_t sort) {
    const std::size_t n = sort == 0 ? g_.edge_count() : g_.view_count(AgentId(sort - 1));
    std::vector<bool> out(n, false);
    switch (x.kind()) {
      case Kind::True: out.assign(n, true); break;
      case Kind::False: break;
      case Kind::Atom: {
        const auto ref = x.atom_ref();
        if (!ref) throw Error(ErrorKind::UnknownAtom, "formula is not sort-checked");
        out = ref->agent ? g_.valuation().agent[ref->agent->index()][ref->index] : g_.valuation().env[ref->index];
        break;
      }
      case Kind::Not: {
        out = eval(x.operand(), sort);
        out.flip();
        break;
      }
      case Kind::And: {
        out = eval(x.lhs(), sort);
        const auto rhs = eval(x.rhs(), sort);
        for (std::size_t i = 0; i < n; ++i) out[i] = out[i] && rhs[i];
        break;
      }
      case Kind::Diamond: {
        const AgentId a = *x.agent_id();
        const auto inner = eval(x.operand(), 0);
        for (std::size_t v = 0; v < n; ++v)
          for (auto e : g_.fiber(a, ViewId(v))) out[v] = out[v] || inner[e.index()];
        break;
      }
      case Kind::SomeView: {
        const AgentId a = *x.agent_id();
        const auto inner = eval(x.operand(), a.index() + 1);
        for (std::size_t e = 0; e < n; ++e)
          for (auto v : g_.views_of(EdgeId(e), a)) out[e] = out[e] || inner[v.index()];
        break;
      }
      default: throw Error(ErrorKind::SortError, "unexpected derived connective after desugaring");
    }
    return out;
  }

  const GeneralizedModel& g_;
};

inline bool sat_generalized(const GeneralizedModel& g, EdgeId e, const Formula& x) {
  if (e.index() >= g.edge_count()) throw Error(ErrorKind::UnknownPoint, "unknown edge #" + std::to_string(e.index()));
  return GeneralizedEvaluator(g).extension(sort_check(x, Sort::world(), g.signature()), 0)[e.index()];
}

inline bool sat_generalized(const GeneralizedModel& g, std::string_view edge, const Formula& x) {
  const auto e = g.find_edge(edge);
  if (!e) throw Error(ErrorKind::UnknownPoint, "unknown edge '" + std::string(edge) + "'");
  return sat_generalized(g, *e, x);
}

inline bool sat_generalized(const GeneralizedModel& g, AgentId a, ViewId v, const Formula& x) {
  if (a.index() >= g.agent_count() || v.index() >= g.view_count(a))
    throw Error(ErrorKind::UnknownPoint, "unknown view #" + std::to_string(v.index()));
  const Formula checked = sort_check(x, Sort::of(g.signature().agent_name(a)), g.signature());
  return GeneralizedEvaluator(g).extension(checked, a.index() + 1)[v.index()];
}

inline bool sat_generalized(const GeneralizedModel& g, std::string_view agent, std::string_view view, const Formula& x) {
  const auto a = g.signature().find_agent(agent);
  if (!a) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + std::string(agent) + "'");
  const auto v = g.find_view(*a, view);
  if (!v) throw Error(ErrorKind::UnknownPoint, "unknown view '" + std::string(view) + "' of agent " + std::string(agent));
  return sat_generalized(g, *a, *v, x);
}

}  // namespace hyperknow

#endif  // HYPERKNOW_NEIGHBORHOOD_HPP
