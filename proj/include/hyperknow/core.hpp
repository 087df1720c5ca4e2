#ifndef HYPERKNOW_CORE_HPP
#define HYPERKNOW_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknow/errors.hpp"

namespace hyperknow {

/// Strongly typed dense index. Agents, views and edges are all numbered in
/// declaration order; views are numbered per agent.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(Id, Id) = default;
};

using AgentId = Id<struct AgentTag>;
using ViewId = Id<struct ViewTag>;
using EdgeId = Id<struct EdgeTag>;

inline bool is_token_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

/// Agent and atom names: letters, digits and underscore.
inline bool is_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
}

/// View, edge and world names additionally admit '.', which generated names use
/// as a separator.
inline bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return is_token_char(c) || c == '.'; });
}

/// Where an atom lives: AP_e when `agent` is empty, AP_agent otherwise.
struct AtomRef {
  std::optional<AgentId> agent;
  std::size_t index = 0;

  friend bool operator==(const AtomRef&, const AtomRef&) = default;
};

/// Agents plus their atom alphabets. Atom names are unique across every sort,
/// so an atom name alone determines its sort.
class Signature {
 public:
  Signature() = default;

  Signature(std::vector<std::string> agents, std::vector<std::vector<std::string>> agent_atoms,
            std::vector<std::string> env_atoms)
      : agents_(std::move(agents)), agent_atoms_(std::move(agent_atoms)), env_atoms_(std::move(env_atoms)) {
    agent_atoms_.resize(agents_.size());
    std::vector<Violation> problems;
    for (std::size_t i = 0; i < agents_.size(); ++i) {
      const auto& name = agents_[i];
      if (!is_token(name) || name == "env")
        problems.push_back({"signature", "invalid agent name '" + name + "'"});
      if (!agent_index_.emplace(name, AgentId(i)).second)
        problems.push_back({"signature", "duplicate agent '" + name + "'"});
    }
    auto add_atom = [&](const std::string& atom, AtomRef ref) {
      if (!is_token(atom) || atom == "true" || atom == "false")
        problems.push_back({"signature", "invalid atom name '" + atom + "'"});
      if (!atom_index_.emplace(atom, ref).second)
        problems.push_back({"signature", "atom '" + atom + "' declared more than once"});
    };
    for (std::size_t a = 0; a < agents_.size(); ++a)
      for (std::size_t i = 0; i < agent_atoms_[a].size(); ++i) add_atom(agent_atoms_[a][i], {AgentId(a), i});
    for (std::size_t i = 0; i < env_atoms_.size(); ++i) add_atom(env_atoms_[i], {std::nullopt, i});
    if (!problems.empty()) throw ValidationError(std::move(problems));
  }

  std::size_t agent_count() const { return agents_.size(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::string& agent_name(AgentId a) const { return agents_.at(a.index()); }
  const std::vector<std::string>& agent_atoms(AgentId a) const { return agent_atoms_.at(a.index()); }
  const std::vector<std::string>& env_atoms() const { return env_atoms_; }

  std::optional<AgentId> find_agent(std::string_view name) const {
    auto it = agent_index_.find(name);
    if (it == agent_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<AtomRef> find_atom(std::string_view name) const {
    auto it = atom_index_.find(name);
    if (it == atom_index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& atom_name(const AtomRef& ref) const {
    return ref.agent ? agent_atoms_.at(ref.agent->index()).at(ref.index) : env_atoms_.at(ref.index);
  }

  bool has_agent_atoms() const {
    return std::any_of(agent_atoms_.begin(), agent_atoms_.end(), [](const auto& v) { return !v.empty(); });
  }

  friend bool operator==(const Signature& x, const Signature& y) {
    return x.agents_ == y.agents_ && x.agent_atoms_ == y.agent_atoms_ && x.env_atoms_ == y.env_atoms_;
  }

 private:
  std::vector<std::string> agents_;
  std::vector<std::vector<std::string>> agent_atoms_;
  std::vector<std::string> env_atoms_;
  std::map<std::string, AgentId, std::less<>> agent_index_;
  std::map<std::string, AtomRef, std::less<>> atom_index_;
};

/// Projection table of a chromatic hypergraph: proj[e][a] is the view of agent
/// a in edge e, or empty when a is dead in e.
using ProjectionTable = std::vector<std::vector<std::optional<ViewId>>>;

/// Lists every broken hypergraph condition of a projection table (color
/// discipline, surjectivity, non-emptiness). Functionality is structural here.
inline std::vector<Violation> hypergraph_violations(const Signature& sig,
                                                    const std::vector<std::vector<std::string>>& view_names,
                                                    const std::vector<std::string>& edge_names,
                                                    const ProjectionTable& proj) {
  std::vector<Violation> out;
  const std::size_t n_agents = sig.agent_count();
  if (view_names.size() != n_agents)
    out.push_back({"shape", "view table has " + std::to_string(view_names.size()) + " agents, signature has " +
                                std::to_string(n_agents)});
  if (proj.size() != edge_names.size())
    out.push_back({"shape", "projection table and edge list differ in length"});
  if (!out.empty()) return out;

  std::vector<std::vector<bool>> covered(n_agents);
  for (std::size_t a = 0; a < n_agents; ++a) covered[a].assign(view_names[a].size(), false);

  for (std::size_t e = 0; e < proj.size(); ++e) {
    if (proj[e].size() != n_agents) {
      out.push_back({"shape", "edge " + edge_names[e] + " has a projection row of the wrong width"});
      continue;
    }
    bool any = false;
    for (std::size_t a = 0; a < n_agents; ++a) {
      if (!proj[e][a]) continue;
      any = true;
      const auto v = proj[e][a]->index();
      if (v >= view_names[a].size()) {
        out.push_back({"color discipline", "edge " + edge_names[e] + " projects agent " + sig.agent_name(AgentId(a)) +
                                               " to view #" + std::to_string(v) + ", which is not a view of that agent"});
        continue;
      }
      covered[a][v] = true;
    }
    if (!any) out.push_back({"non-emptiness", "edge " + edge_names[e] + " contains no view"});
  }
  for (std::size_t a = 0; a < n_agents; ++a)
    for (std::size_t v = 0; v < view_names[a].size(); ++v)
      if (!covered[a][v])
        out.push_back({"surjectivity", "view " + view_names[a][v] + " of agent " + sig.agent_name(AgentId(a)) +
                                           " belongs to no edge"});
  return out;
}

/// A chromatic hypergraph (E, {V_a, proj_a}). Immutable once created.
class ChromaticHypergraph {
 public:
  /// Validates all hypergraph conditions and throws ValidationError listing
  /// every violation.
  static ChromaticHypergraph create(Signature sig, std::vector<std::vector<std::string>> view_names,
                                    std::vector<std::string> edge_names, ProjectionTable proj) {
    auto problems = hypergraph_violations(sig, view_names, edge_names, proj);
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return ChromaticHypergraph(std::move(sig), std::move(view_names), std::move(edge_names), std::move(proj));
  }

  const Signature& signature() const { return sig_; }
  std::size_t agent_count() const { return sig_.agent_count(); }
  std::size_t edge_count() const { return edge_names_.size(); }
  std::size_t view_count(AgentId a) const { return view_names_.at(a.index()).size(); }
  std::size_t total_view_count() const {
    std::size_t n = 0;
    for (const auto& vs : view_names_) n += vs.size();
    return n;
  }

  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e.index()); }
  const std::string& view_name(AgentId a, ViewId v) const { return view_names_.at(a.index()).at(v.index()); }
  const std::vector<std::string>& edge_names() const { return edge_names_; }
  const std::vector<std::vector<std::string>>& view_names() const { return view_names_; }
  const ProjectionTable& projection() const { return proj_; }

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

  std::optional<ViewId> proj(EdgeId e, AgentId a) const { return proj_.at(e.index()).at(a.index()); }
  bool alive(EdgeId e, AgentId a) const { return proj(e, a).has_value(); }

  /// The edges containing view v of agent a; never empty.
  std::span<const EdgeId> fiber(AgentId a, ViewId v) const { return fibers_.at(a.index()).at(v.index()); }

  friend bool operator==(const ChromaticHypergraph& x, const ChromaticHypergraph& y) {
    return x.sig_ == y.sig_ && x.view_names_ == y.view_names_ && x.edge_names_ == y.edge_names_ && x.proj_ == y.proj_;
  }

 private:
  ChromaticHypergraph(Signature sig, std::vector<std::vector<std::string>> view_names,
                      std::vector<std::string> edge_names, ProjectionTable proj)
      : sig_(std::move(sig)), view_names_(std::move(view_names)), edge_names_(std::move(edge_names)),
        proj_(std::move(proj)) {
    fibers_.resize(sig_.agent_count());
    for (std::size_t a = 0; a < fibers_.size(); ++a) fibers_[a].resize(view_names_[a].size());
    for (std::size_t e = 0; e < proj_.size(); ++e)
      for (std::size_t a = 0; a < proj_[e].size(); ++a)
        if (proj_[e][a]) fibers_[a][proj_[e][a]->index()].push_back(EdgeId(e));
  }

  Signature sig_;
  std::vector<std::vector<std::string>> view_names_;
  std::vector<std::string> edge_names_;
  ProjectionTable proj_;
  std::vector<std::vector<std::vector<EdgeId>>> fibers_;
};

/// Two-level valuation: agent[a][atom][view] (ℓ_a) and env[atom][edge] (ℓ_e).
struct Valuation {
  std::vector<std::vector<std::vector<bool>>> agent;
  std::vector<std::vector<bool>> env;

  /// All-false valuation sized for the given hypergraph.
  static Valuation empty_for(const ChromaticHypergraph& h) {
    Valuation val;
    const auto& sig = h.signature();
    val.agent.resize(sig.agent_count());
    for (std::size_t a = 0; a < sig.agent_count(); ++a)
      val.agent[a].assign(sig.agent_atoms(AgentId(a)).size(), std::vector<bool>(h.view_count(AgentId(a)), false));
    val.env.assign(sig.env_atoms().size(), std::vector<bool>(h.edge_count(), false));
    return val;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline std::vector<Violation> valuation_violations(const ChromaticHypergraph& h, const Valuation& val) {
  std::vector<Violation> out;
  const auto& sig = h.signature();
  if (val.agent.size() != sig.agent_count()) {
    out.push_back({"valuation", "agent valuation table has the wrong number of agents"});
    return out;
  }
  for (std::size_t a = 0; a < sig.agent_count(); ++a) {
    const auto& atoms = sig.agent_atoms(AgentId(a));
    if (val.agent[a].size() != atoms.size()) {
      out.push_back({"valuation", "valuation of agent " + sig.agent_name(AgentId(a)) + " is not defined exactly on its atoms"});
      continue;
    }
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (val.agent[a][i].size() != h.view_count(AgentId(a)))
        out.push_back({"valuation", "extension of atom " + atoms[i] + " does not match the views of " +
                                        sig.agent_name(AgentId(a))});
  }
  if (val.env.size() != sig.env_atoms().size()) {
    out.push_back({"valuation", "environment valuation is not defined exactly on AP_e"});
    return out;
  }
  for (std::size_t i = 0; i < val.env.size(); ++i)
    if (val.env[i].size() != h.edge_count())
      out.push_back({"valuation", "extension of atom " + sig.env_atoms()[i] + " does not match the edges"});
  return out;
}

/// A chromatic hypergraph model (H, {ℓ_a}, ℓ_e). Immutable; the hypergraph is
/// shared between models that differ only in their valuation.
class Model {
 public:
  Model(std::shared_ptr<const ChromaticHypergraph> h, Valuation val) : h_(std::move(h)), val_(std::move(val)) {
    auto problems = valuation_violations(*h_, val_);
    if (!problems.empty()) throw ValidationError(std::move(problems));
  }
  Model(ChromaticHypergraph h, Valuation val)
      : Model(std::make_shared<const ChromaticHypergraph>(std::move(h)), std::move(val)) {}

  const ChromaticHypergraph& hypergraph() const { return *h_; }
  const std::shared_ptr<const ChromaticHypergraph>& hypergraph_ptr() const { return h_; }
  const Valuation& valuation() const { return val_; }
  const Signature& signature() const { return h_->signature(); }

  bool holds_agent_atom(AgentId a, std::size_t atom, ViewId v) const { return val_.agent[a.index()][atom][v.index()]; }
  bool holds_env_atom(std::size_t atom, EdgeId e) const { return val_.env[atom][e.index()]; }

  friend bool operator==(const Model& x, const Model& y) { return *x.h_ == *y.h_ && x.val_ == y.val_; }

 private:
  std::shared_ptr<const ChromaticHypergraph> h_;
  Valuation val_;
};

// ---------------------------------------------------------------------------
// Decoded (unvalidated) model description, as produced by the model parser.

struct RawView {
  std::string agent;
  std::string name;
  std::vector<std::string> atoms;
  std::optional<SourceSpan> span;
};

struct RawIncidence {
  std::string agent;
  std::string view;
  std::optional<SourceSpan> span;
};

struct RawEdge {
  std::string name;
  std::vector<RawIncidence> members;
  std::vector<std::string> env_atoms;
  std::optional<SourceSpan> span;
};

struct RawModel {
  Signature sig;
  bool generalized = false;
  std::vector<RawView> views;
  std::vector<RawEdge> edges;
};

namespace detail {

/// Resolution of a RawModel shared by the ordinary and generalized builders:
/// view tables, per-edge incidence lists and the valuation.
struct ResolvedRaw {
  std::vector<std::vector<std::string>> view_names;
  std::vector<std::string> edge_names;
  std::vector<std::vector<std::vector<ViewId>>> incidence;  // [edge][agent] -> views
  Valuation val;
  std::vector<Violation> problems;
};

inline ResolvedRaw resolve_raw(const RawModel& raw) {
  ResolvedRaw out;
  const auto& sig = raw.sig;
  const std::size_t n_agents = sig.agent_count();
  out.view_names.resize(n_agents);
  std::vector<std::vector<std::vector<std::string>>> view_atoms(n_agents);

  for (const auto& rv : raw.views) {
    auto a = sig.find_agent(rv.agent);
    if (!a) {
      out.problems.push_back({"color discipline", "view " + rv.name + " is declared for unknown agent " + rv.agent, rv.span});
      continue;
    }
    if (!is_name(rv.name)) out.problems.push_back({"names", "invalid view name '" + rv.name + "'", rv.span});
    auto& names = out.view_names[a->index()];
    if (std::find(names.begin(), names.end(), rv.name) != names.end()) {
      out.problems.push_back({"names", "duplicate view " + rv.name + " of agent " + rv.agent, rv.span});
      continue;
    }
    names.push_back(rv.name);
    view_atoms[a->index()].push_back(rv.atoms);
  }

  out.val.agent.resize(n_agents);
  for (std::size_t a = 0; a < n_agents; ++a) {
    const AgentId agent(a);
    out.val.agent[a].assign(sig.agent_atoms(agent).size(), std::vector<bool>(out.view_names[a].size(), false));
    for (std::size_t v = 0; v < view_atoms[a].size(); ++v) {
      for (const auto& atom : view_atoms[a][v]) {
        auto ref = sig.find_atom(atom);
        if (!ref || !ref->agent || *ref->agent != agent) {
          out.problems.push_back({"valuation", "atom " + atom + " on view " + out.view_names[a][v] +
                                                   " is not an atom of agent " + sig.agent_name(agent)});
          continue;
        }
        out.val.agent[a][ref->index][v] = true;
      }
    }
  }

  out.val.env.assign(sig.env_atoms().size(), std::vector<bool>(raw.edges.size(), false));
  std::set<std::string> seen_edges;
  for (std::size_t e = 0; e < raw.edges.size(); ++e) {
    const auto& re = raw.edges[e];
    if (!is_name(re.name)) out.problems.push_back({"names", "invalid edge name '" + re.name + "'", re.span});
    if (!seen_edges.insert(re.name).second)
      out.problems.push_back({"names", "duplicate edge label " + re.name, re.span});
    out.edge_names.push_back(re.name);
    std::vector<std::vector<ViewId>> row(n_agents);
    for (const auto& inc : re.members) {
      auto a = sig.find_agent(inc.agent);
      if (!a) {
        out.problems.push_back({"color discipline", "edge " + re.name + " mentions unknown agent " + inc.agent, inc.span});
        continue;
      }
      const auto& names = out.view_names[a->index()];
      auto it = std::find(names.begin(), names.end(), inc.view);
      if (it == names.end()) {
        out.problems.push_back({"color discipline", "edge " + re.name + " assigns " + inc.view + " to agent " + inc.agent +
                                                        ", but it is not a view of " + inc.agent,
                                inc.span});
        continue;
      }
      const ViewId v(static_cast<std::size_t>(it - names.begin()));
      auto& slot = row[a->index()];
      if (std::find(slot.begin(), slot.end(), v) != slot.end()) {
        out.problems.push_back({"names", "edge " + re.name + " lists view " + inc.view + " twice", inc.span});
        continue;
      }
      slot.push_back(v);
    }
    for (const auto& atom : re.env_atoms) {
      auto ref = sig.find_atom(atom);
      if (!ref || ref->agent) {
        out.problems.push_back({"valuation", "atom " + atom + " on edge " + re.name + " is not an environment atom", re.span});
        continue;
      }
      out.val.env[ref->index][e] = true;
    }
    out.incidence.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

/// Validates a decoded model and builds it. Every violated condition is
/// reported at once through ValidationError.
inline Model build_model(const RawModel& raw) {
  auto r = detail::resolve_raw(raw);
  if (raw.generalized)
    r.problems.push_back({"mode", "generalized model passed where a chromatic hypergraph model is required"});
  ProjectionTable proj(r.incidence.size(), std::vector<std::optional<ViewId>>(raw.sig.agent_count()));
  for (std::size_t e = 0; e < r.incidence.size(); ++e) {
    for (std::size_t a = 0; a < r.incidence[e].size(); ++a) {
      const auto& vs = r.incidence[e][a];
      if (vs.size() > 1)
        r.problems.push_back({"functionality", "edge " + r.edge_names[e] + " contains " + std::to_string(vs.size()) +
                                                   " views of agent " + raw.sig.agent_name(AgentId(a))});
      if (!vs.empty()) proj[e][a] = vs.front();
    }
  }
  for (auto& v : hypergraph_violations(raw.sig, r.view_names, r.edge_names, proj)) r.problems.push_back(std::move(v));
  if (!r.problems.empty()) throw ValidationError(std::move(r.problems));
  return Model(ChromaticHypergraph::create(raw.sig, std::move(r.view_names), std::move(r.edge_names), std::move(proj)),
               std::move(r.val));
}

/// Inverse of build_model: the declaration list of a model.
inline RawModel to_raw(const Model& m) {
  RawModel raw;
  const auto& h = m.hypergraph();
  const auto& sig = m.signature();
  raw.sig = sig;
  for (std::size_t a = 0; a < sig.agent_count(); ++a) {
    const AgentId agent(a);
    for (std::size_t v = 0; v < h.view_count(agent); ++v) {
      RawView rv{sig.agent_name(agent), h.view_name(agent, ViewId(v)), {}, std::nullopt};
      const auto& atoms = sig.agent_atoms(agent);
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (m.holds_agent_atom(agent, i, ViewId(v))) rv.atoms.push_back(atoms[i]);
      raw.views.push_back(std::move(rv));
    }
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    RawEdge re{h.edge_name(EdgeId(e)), {}, {}, std::nullopt};
    for (std::size_t a = 0; a < sig.agent_count(); ++a)
      if (auto v = h.proj(EdgeId(e), AgentId(a)))
        re.members.push_back({sig.agent_name(AgentId(a)), h.view_name(AgentId(a), *v), std::nullopt});
    for (std::size_t i = 0; i < sig.env_atoms().size(); ++i)
      if (m.holds_env_atom(i, EdgeId(e))) re.env_atoms.push_back(sig.env_atoms()[i]);
    raw.edges.push_back(std::move(re));
  }
  return raw;
}

// ---------------------------------------------------------------------------
// Name-based queries (throw on unknown names).

inline AgentId require_agent(const Signature& sig, std::string_view name) {
  if (auto a = sig.find_agent(name)) return *a;
  throw Error(ErrorKind::UnknownAgent, "unknown agent '" + std::string(name) + "'");
}

inline EdgeId require_edge(const ChromaticHypergraph& h, std::string_view name) {
  if (auto e = h.find_edge(name)) return *e;
  throw Error(ErrorKind::UnknownPoint, "unknown edge '" + std::string(name) + "'");
}

inline ViewId require_view(const ChromaticHypergraph& h, AgentId a, std::string_view name) {
  if (auto v = h.find_view(a, name)) return *v;
  throw Error(ErrorKind::UnknownPoint,
              "unknown view '" + std::string(name) + "' of agent " + h.signature().agent_name(a));
}

/// True iff proj_a(e) is defined.
inline bool alive(const Model& m, std::string_view edge, std::string_view agent) {
  const auto& h = m.hypergraph();
  return h.alive(require_edge(h, edge), require_agent(h.signature(), agent));
}

/// The fiber {e | proj_a(e) = v}, by edge name, in model order.
inline std::vector<std::string> worlds_of_view(const Model& m, std::string_view agent, std::string_view view) {
  const auto& h = m.hypergraph();
  const auto a = require_agent(h.signature(), agent);
  std::vector<std::string> out;
  for (auto e : h.fiber(a, require_view(h, a, view))) out.push_back(h.edge_name(e));
  return out;
}

// ---------------------------------------------------------------------------
// Simple hypergraphs and simplicial complexes.

/// A hypergraph (V, E) with E a set of vertex sets. Vertex sets are stored as
/// sorted index vectors.
struct SimpleHypergraph {
  std::vector<std::string> vertices;
  std::set<std::vector<std::size_t>> hyperedges;
};

inline bool is_downward_closed(const SimpleHypergraph& s) {
  for (const auto& edge : s.hyperedges) {
    if (edge.size() <= 1) continue;
    for (std::size_t skip = 0; skip < edge.size(); ++skip) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < edge.size(); ++i)
        if (i != skip) face.push_back(edge[i]);
      if (!s.hyperedges.contains(face)) return false;
    }
  }
  return true;
}

/// A simple hypergraph whose hyperedge set is closed under non-empty subsets.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(SimpleHypergraph s) : s_(std::move(s)) {
    if (!is_downward_closed(s_))
      throw ValidationError(
          std::vector<Violation>{Violation("downward closure", "hyperedge set is not closed under non-empty subsets")});
  }

  const SimpleHypergraph& hypergraph() const { return s_; }
  const std::set<std::vector<std::size_t>>& simplices() const { return s_.hyperedges; }

  /// f[k] is the number of simplices with k+1 vertices.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& simplex : s_.hyperedges) {
      if (f.size() < simplex.size()) f.resize(simplex.size(), 0);
      ++f[simplex.size() - 1];
    }
    return f;
  }

  long euler_characteristic() const {
    long chi = 0;
    const auto f = f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(f[k]);
    return chi;
  }

 private:
  SimpleHypergraph s_;
};

/// Forgets colors and edge identity: vertices are all views (named
/// "agent:view"), parallel edges collapse.
inline SimpleHypergraph underlying_simple(const ChromaticHypergraph& h) {
  SimpleHypergraph s;
  std::vector<std::size_t> offset(h.agent_count());
  for (std::size_t a = 0; a < h.agent_count(); ++a) {
    offset[a] = s.vertices.size();
    for (std::size_t v = 0; v < h.view_count(AgentId(a)); ++v)
      s.vertices.push_back(h.signature().agent_name(AgentId(a)) + ":" + h.view_name(AgentId(a), ViewId(v)));
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < h.agent_count(); ++a)
      if (auto v = h.proj(EdgeId(e), AgentId(a))) members.push_back(offset[a] + v->index());
    std::sort(members.begin(), members.end());
    if (!members.empty()) s.hyperedges.insert(std::move(members));
  }
  return s;
}

inline SimplicialComplex downward_closure(const SimpleHypergraph& s) {
  SimpleHypergraph closed{s.vertices, {}};
  for (const auto& edge : s.hyperedges) {
    if (edge.size() >= 64) throw Error(ErrorKind::Bounds, "hyperedge too large for downward closure");
    const std::uint64_t full = (std::uint64_t{1} << edge.size()) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < edge.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) face.push_back(edge[i]);
      closed.hyperedges.insert(std::move(face));
    }
  }
  return SimplicialComplex(std::move(closed));
}

}  // namespace hyperknow

#endif  // HYPERKNOW_CORE_HPP
