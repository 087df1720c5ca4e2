#ifndef HYPERKNOW_FRAMES_HPP
#define HYPERKNOW_FRAMES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknow/core.hpp"
#include "hyperknow/errors.hpp"
#include "hyperknow/parser.hpp"

namespace hyperknow {

/// Worlds plus, per agent, a partial equivalence relation stored as a
/// partition of its domain. Classes are kept sorted (members ascending,
/// classes by first member), so equal relations compare equal.
class PartialEpistemicFrame {
 public:
  using Classes = std::vector<std::vector<std::size_t>>;

  static PartialEpistemicFrame create(std::vector<std::string> agents, std::vector<std::string> worlds,
                                      std::vector<Classes> classes) {
    std::vector<Violation> problems;
    if (classes.size() != agents.size()) {
      problems.emplace_back("shape", "class table does not match the agent list");
      throw ValidationError(std::move(problems));
    }
    std::set<std::string> seen_agents;
    for (const auto& a : agents) {
      if (!is_token(a)) problems.emplace_back("names", "invalid agent name '" + a + "'");
      if (!seen_agents.insert(a).second) problems.emplace_back("names", "duplicate agent " + a);
    }
    std::set<std::string> seen_worlds;
    for (const auto& w : worlds) {
      if (!is_name(w)) problems.emplace_back("names", "invalid world name '" + w + "'");
      if (!seen_worlds.insert(w).second) problems.emplace_back("names", "duplicate world " + w);
    }
    std::vector<bool> covered(worlds.size(), false);
    for (std::size_t a = 0; a < agents.size(); ++a) {
      std::vector<bool> used(worlds.size(), false);
      for (auto& cls : classes[a]) {
        if (cls.empty()) problems.emplace_back("partition", "empty class for agent " + agents[a]);
        std::sort(cls.begin(), cls.end());
        for (auto w : cls) {
          if (w >= worlds.size()) {
            problems.emplace_back("partition", "class of agent " + agents[a] + " mentions an unknown world");
            continue;
          }
          if (used[w]) problems.emplace_back("partition", "world " + worlds[w] + " lies in two classes of agent " + agents[a]);
          used[w] = covered[w] = true;
        }
      }
      std::sort(classes[a].begin(), classes[a].end());
    }
    for (std::size_t w = 0; w < worlds.size(); ++w)
      if (!covered[w]) problems.emplace_back("non-emptiness", "world " + worlds[w] + " is in the domain of no agent");
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return PartialEpistemicFrame(std::move(agents), std::move(worlds), std::move(classes));
  }

  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& worlds() const { return worlds_; }
  std::size_t agent_count() const { return agents_.size(); }
  std::size_t world_count() const { return worlds_.size(); }
  const Classes& classes(std::size_t a) const { return classes_.at(a); }

  /// Index of the class of w for agent a, if w ∈ dom_a.
  std::optional<std::size_t> class_of(std::size_t a, std::size_t w) const {
    const auto c = class_index_.at(a).at(w);
    if (c < 0) return std::nullopt;
    return static_cast<std::size_t>(c);
  }
  bool in_domain(std::size_t a, std::size_t w) const { return class_of(a, w).has_value(); }
  bool related(std::size_t a, std::size_t w, std::size_t u) const {
    const auto c = class_of(a, w);
    return c && c == class_of(a, u);
  }

  std::optional<std::size_t> find_world(std::string_view name) const {
    for (std::size_t w = 0; w < worlds_.size(); ++w)
      if (worlds_[w] == name) return w;
    return std::nullopt;
  }
  std::optional<std::size_t> find_agent(std::string_view name) const {
    for (std::size_t a = 0; a < agents_.size(); ++a)
      if (agents_[a] == name) return a;
    return std::nullopt;
  }

  friend bool operator==(const PartialEpistemicFrame& x, const PartialEpistemicFrame& y) {
    return x.agents_ == y.agents_ && x.worlds_ == y.worlds_ && x.classes_ == y.classes_;
  }

 private:
  PartialEpistemicFrame(std::vector<std::string> agents, std::vector<std::string> worlds, std::vector<Classes> classes)
      : agents_(std::move(agents)), worlds_(std::move(worlds)), classes_(std::move(classes)) {
    class_index_.assign(agents_.size(), std::vector<long>(worlds_.size(), -1));
    for (std::size_t a = 0; a < agents_.size(); ++a)
      for (std::size_t c = 0; c < classes_[a].size(); ++c)
        for (auto w : classes_[a][c]) class_index_[a][w] = static_cast<long>(c);
  }

  std::vector<std::string> agents_;
  std::vector<std::string> worlds_;
  std::vector<Classes> classes_;
  std::vector<std::vector<long>> class_index_;
};

/// A frame with a valuation of environment atoms on worlds.
struct PartialEpistemicModel {
  PartialEpistemicFrame frame;
  std::vector<std::string> env_atoms;
  std::vector<std::vector<bool>> env;  // [atom][world]

  PartialEpistemicModel(PartialEpistemicFrame fr, std::vector<std::string> atoms, std::vector<std::vector<bool>> val)
      : frame(std::move(fr)), env_atoms(std::move(atoms)), env(std::move(val)) {
    std::vector<Violation> problems;
    if (env.size() != env_atoms.size()) problems.emplace_back("valuation", "valuation is not defined exactly on the atoms");
    for (std::size_t i = 0; i < env.size() && i < env_atoms.size(); ++i)
      if (env[i].size() != frame.world_count())
        problems.emplace_back("valuation", "extension of " + env_atoms[i] + " does not match the worlds");
    if (!problems.empty()) throw ValidationError(std::move(problems));
    // Validates the atom names as a signature.
    (void)signature();
  }

  Signature signature() const { return Signature(frame.agents(), {}, env_atoms); }
  std::optional<std::size_t> find_atom(std::string_view name) const {
    for (std::size_t i = 0; i < env_atoms.size(); ++i)
      if (env_atoms[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const PartialEpistemicModel&, const PartialEpistemicModel&) = default;
};

// ---------------------------------------------------------------------------
// eta: frames to hypergraphs, kappa: hypergraphs to frames.

namespace detail {

inline std::string class_view_name(const std::string& agent, const std::vector<std::string>& worlds,
                                   const std::vector<std::size_t>& cls) {
  std::string name = agent;
  for (auto w : cls) name += "." + worlds[w];
  return name;
}

}  // namespace detail

/// E = M, V_a = classes of ~a (named "<agent>.<w1>.<w2>..."), proj_a(w) = [w]_a.
inline ChromaticHypergraph eta(const PartialEpistemicFrame& fr, const Signature& sig) {
  std::vector<std::vector<std::string>> views(fr.agent_count());
  ProjectionTable proj(fr.world_count(), std::vector<std::optional<ViewId>>(fr.agent_count()));
  for (std::size_t a = 0; a < fr.agent_count(); ++a) {
    for (const auto& cls : fr.classes(a)) views[a].push_back(detail::class_view_name(fr.agents()[a], fr.worlds(), cls));
    for (std::size_t w = 0; w < fr.world_count(); ++w)
      if (auto c = fr.class_of(a, w)) proj[w][a] = ViewId(*c);
  }
  return ChromaticHypergraph::create(sig, std::move(views), fr.worlds(), std::move(proj));
}

inline ChromaticHypergraph eta(const PartialEpistemicFrame& fr) { return eta(fr, Signature(fr.agents(), {}, {})); }

/// M = E; e ~a e' iff both project to the same a-view.
inline PartialEpistemicFrame kappa(const ChromaticHypergraph& h) {
  std::vector<PartialEpistemicFrame::Classes> classes(h.agent_count());
  for (std::size_t a = 0; a < h.agent_count(); ++a)
    for (std::size_t v = 0; v < h.view_count(AgentId(a)); ++v) {
      std::vector<std::size_t> cls;
      for (auto e : h.fiber(AgentId(a), ViewId(v))) cls.push_back(e.index());
      classes[a].push_back(std::move(cls));
    }
  return PartialEpistemicFrame::create(h.signature().agents(), h.edge_names(), std::move(classes));
}

inline Model eta_model(const PartialEpistemicModel& m) {
  auto h = eta(m.frame, m.signature());
  Valuation val = Valuation::empty_for(h);
  val.env = m.env;
  return Model(std::move(h), std::move(val));
}

inline PartialEpistemicModel kappa_model(const Model& m) {
  if (m.signature().has_agent_atoms())
    throw Error(ErrorKind::NonEmptyAgentAtoms, "model has agent atoms; only models with empty AP_a correspond to frames");
  return PartialEpistemicModel(kappa(m.hypergraph()), m.signature().env_atoms(), m.valuation().env);
}

/// Drops every agent atom (and its valuation) from a model.
inline Model strip_agent_atoms(const Model& m) {
  const auto& h = m.hypergraph();
  Signature sig(h.signature().agents(), {}, h.signature().env_atoms());
  auto stripped = ChromaticHypergraph::create(sig, h.view_names(), h.edge_names(), h.projection());
  Valuation val = Valuation::empty_for(stripped);
  val.env = m.valuation().env;
  return Model(std::move(stripped), std::move(val));
}

// ---------------------------------------------------------------------------
// Morphisms

struct HypergraphMorphism {
  std::vector<std::vector<ViewId>> view_maps;  // [agent][view] -> target view
  std::vector<EdgeId> edge_map;                // [edge] -> target edge

  friend bool operator==(const HypergraphMorphism&, const HypergraphMorphism&) = default;
};

struct FrameMorphism {
  std::vector<std::size_t> map;  // [world] -> target world

  friend bool operator==(const FrameMorphism&, const FrameMorphism&) = default;
};

/// Checks proj_a(e) = v  =>  proj'_a(f_E(e)) = f_a(v). Throws on maps of the
/// wrong shape or pointing outside the target.
inline bool check_morphism(const HypergraphMorphism& f, const ChromaticHypergraph& src, const ChromaticHypergraph& dst) {
  if (src.signature().agents() != dst.signature().agents())
    throw Error(ErrorKind::Morphism, "source and target have different agents");
  if (f.edge_map.size() != src.edge_count() || f.view_maps.size() != src.agent_count())
    throw Error(ErrorKind::Morphism, "morphism does not cover the source");
  for (auto e : f.edge_map)
    if (e.index() >= dst.edge_count()) throw Error(ErrorKind::Morphism, "edge map points outside the target");
  for (std::size_t a = 0; a < src.agent_count(); ++a) {
    if (f.view_maps[a].size() != src.view_count(AgentId(a)))
      throw Error(ErrorKind::Morphism, "view map of agent " + src.signature().agent_name(AgentId(a)) + " does not cover its views");
    for (auto v : f.view_maps[a])
      if (v.index() >= dst.view_count(AgentId(a))) throw Error(ErrorKind::Morphism, "view map points outside the target");
  }
  for (std::size_t e = 0; e < src.edge_count(); ++e)
    for (std::size_t a = 0; a < src.agent_count(); ++a)
      if (auto v = src.proj(EdgeId(e), AgentId(a)))
        if (dst.proj(f.edge_map[e], AgentId(a)) != f.view_maps[a][v->index()]) return false;
  return true;
}

/// Checks w ~a w'  =>  f(w) ~a f(w') (including w = w').
inline bool check_morphism(const FrameMorphism& f, const PartialEpistemicFrame& src, const PartialEpistemicFrame& dst) {
  if (src.agents() != dst.agents()) throw Error(ErrorKind::Morphism, "source and target have different agents");
  if (f.map.size() != src.world_count()) throw Error(ErrorKind::Morphism, "morphism does not cover the source");
  for (auto w : f.map)
    if (w >= dst.world_count()) throw Error(ErrorKind::Morphism, "world map points outside the target");
  for (std::size_t a = 0; a < src.agent_count(); ++a)
    for (const auto& cls : src.classes(a))
      for (auto w : cls)
        if (!dst.related(a, f.map[w], f.map[cls.front()])) return false;
  return true;
}

/// Action of kappa on a hypergraph morphism: the edge map.
inline FrameMorphism kappa(const HypergraphMorphism& f) {
  FrameMorphism g;
  for (auto e : f.edge_map) g.map.push_back(e.index());
  return g;
}

/// Action of eta on a frame morphism: the world map on edges, and the induced
/// map on classes on views.
inline HypergraphMorphism eta(const FrameMorphism& g, const PartialEpistemicFrame& src, const PartialEpistemicFrame& dst) {
  if (!check_morphism(g, src, dst)) throw Error(ErrorKind::Morphism, "not a frame morphism");
  HypergraphMorphism f;
  for (auto w : g.map) f.edge_map.push_back(EdgeId(w));
  f.view_maps.resize(src.agent_count());
  for (std::size_t a = 0; a < src.agent_count(); ++a)
    for (const auto& cls : src.classes(a)) f.view_maps[a].push_back(ViewId(*dst.class_of(a, g.map[cls.front()])));
  return f;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

/// Backtracking search for a color-preserving bijection of edges that induces
/// bijections on views. `compatible` adds extra per-pair constraints (used for
/// valuations).
inline std::optional<HypergraphMorphism> find_iso(const ChromaticHypergraph& x, const ChromaticHypergraph& y,
                                                  const std::function<bool(std::size_t, std::size_t)>& edge_ok,
                                                  const std::function<bool(std::size_t, std::size_t, std::size_t)>& view_ok) {
  if (x.signature().agents() != y.signature().agents() || x.edge_count() != y.edge_count()) return std::nullopt;
  const std::size_t n_agents = x.agent_count();
  for (std::size_t a = 0; a < n_agents; ++a)
    if (x.view_count(AgentId(a)) != y.view_count(AgentId(a))) return std::nullopt;

  // Invariant of an edge: per agent, fiber size of its view (0 when dead).
  auto profile = [n_agents](const ChromaticHypergraph& h, std::size_t e) {
    std::vector<std::size_t> p(n_agents, 0);
    for (std::size_t a = 0; a < n_agents; ++a)
      if (auto v = h.proj(EdgeId(e), AgentId(a))) p[a] = h.fiber(AgentId(a), *v).size();
    return p;
  };
  std::vector<std::vector<std::size_t>> px, py;
  for (std::size_t e = 0; e < x.edge_count(); ++e) px.push_back(profile(x, e));
  for (std::size_t e = 0; e < y.edge_count(); ++e) py.push_back(profile(y, e));
  {
    auto sx = px, sy = py;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }

  const long unset = -1;
  std::vector<long> edge_map(x.edge_count(), unset);
  std::vector<bool> edge_used(y.edge_count(), false);
  std::vector<std::vector<long>> fwd(n_agents), bwd(n_agents);
  for (std::size_t a = 0; a < n_agents; ++a) {
    fwd[a].assign(x.view_count(AgentId(a)), unset);
    bwd[a].assign(y.view_count(AgentId(a)), unset);
  }

  std::function<bool(std::size_t)> place = [&](std::size_t e) -> bool {
    if (e == x.edge_count()) return true;
    for (std::size_t t = 0; t < y.edge_count(); ++t) {
      if (edge_used[t] || px[e] != py[t] || !edge_ok(e, t)) continue;
      std::vector<std::pair<std::size_t, std::size_t>> fresh;  // (agent, view) newly bound
      bool ok = true;
      for (std::size_t a = 0; a < n_agents && ok; ++a) {
        const auto v = x.proj(EdgeId(e), AgentId(a));
        const auto w = y.proj(EdgeId(t), AgentId(a));
        if (v.has_value() != w.has_value()) {
          ok = false;
        } else if (v) {
          const auto vi = v->index(), wi = w->index();
          if (fwd[a][vi] == unset && bwd[a][wi] == unset) {
            if (!view_ok(a, vi, wi)) {
              ok = false;
            } else {
              fwd[a][vi] = static_cast<long>(wi);
              bwd[a][wi] = static_cast<long>(vi);
              fresh.emplace_back(a, vi);
            }
          } else if (fwd[a][vi] != static_cast<long>(wi)) {
            ok = false;
          }
        }
      }
      if (ok) {
        edge_map[e] = static_cast<long>(t);
        edge_used[t] = true;
        if (place(e + 1)) return true;
        edge_used[t] = false;
        edge_map[e] = unset;
      }
      for (auto [a, vi] : fresh) {
        bwd[a][static_cast<std::size_t>(fwd[a][vi])] = unset;
        fwd[a][vi] = unset;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;

  HypergraphMorphism f;
  for (auto t : edge_map) f.edge_map.push_back(EdgeId(static_cast<std::size_t>(t)));
  f.view_maps.resize(n_agents);
  for (std::size_t a = 0; a < n_agents; ++a)
    for (auto w : fwd[a]) f.view_maps[a].push_back(ViewId(static_cast<std::size_t>(w)));
  return f;
}

}  // namespace detail

/// An invertible hypergraph morphism between x and y, if one exists. Agents
/// are matched by name and order.
inline std::optional<HypergraphMorphism> is_isomorphic(const ChromaticHypergraph& x, const ChromaticHypergraph& y) {
  return detail::find_iso(x, y, [](std::size_t, std::size_t) { return true; },
                          [](std::size_t, std::size_t, std::size_t) { return true; });
}

/// Isomorphism of models: additionally preserves every atom.
inline std::optional<HypergraphMorphism> is_isomorphic(const Model& x, const Model& y) {
  if (!(x.signature() == y.signature())) return std::nullopt;
  const auto& vx = x.valuation();
  const auto& vy = y.valuation();
  return detail::find_iso(
      x.hypergraph(), y.hypergraph(),
      [&](std::size_t e, std::size_t t) {
        for (std::size_t i = 0; i < vx.env.size(); ++i)
          if (vx.env[i][e] != vy.env[i][t]) return false;
        return true;
      },
      [&](std::size_t a, std::size_t v, std::size_t w) {
        for (std::size_t i = 0; i < vx.agent[a].size(); ++i)
          if (vx.agent[a][i][v] != vy.agent[a][i][w]) return false;
        return true;
      });
}

namespace detail {

inline std::optional<FrameMorphism> find_frame_iso(const PartialEpistemicFrame& x, const PartialEpistemicFrame& y,
                                                   const std::function<bool(std::size_t, std::size_t)>& world_ok) {
  if (x.agents() != y.agents() || x.world_count() != y.world_count()) return std::nullopt;
  const std::size_t n = x.world_count();
  auto profile = [](const PartialEpistemicFrame& fr, std::size_t w) {
    std::vector<std::size_t> p;
    for (std::size_t a = 0; a < fr.agent_count(); ++a) {
      const auto c = fr.class_of(a, w);
      p.push_back(c ? fr.classes(a)[*c].size() : 0);
    }
    return p;
  };
  std::vector<std::vector<std::size_t>> px, py;
  for (std::size_t w = 0; w < n; ++w) {
    px.push_back(profile(x, w));
    py.push_back(profile(y, w));
  }
  std::vector<std::size_t> map(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t w) -> bool {
    if (w == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || px[w] != py[t] || !world_ok(w, t)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < w && ok; ++u)
        for (std::size_t a = 0; a < x.agent_count() && ok; ++a) ok = x.related(a, w, u) == y.related(a, t, map[u]);
      if (!ok) continue;
      map[w] = t;
      used[t] = true;
      if (place(w + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return FrameMorphism{map};
}

}  // namespace detail

inline std::optional<FrameMorphism> is_isomorphic(const PartialEpistemicFrame& x, const PartialEpistemicFrame& y) {
  return detail::find_frame_iso(x, y, [](std::size_t, std::size_t) { return true; });
}

inline std::optional<FrameMorphism> is_isomorphic(const PartialEpistemicModel& x, const PartialEpistemicModel& y) {
  if (x.env_atoms != y.env_atoms) return std::nullopt;
  return detail::find_frame_iso(x.frame, y.frame, [&](std::size_t w, std::size_t t) {
    for (std::size_t i = 0; i < x.env.size(); ++i)
      if (x.env[i][w] != y.env[i][t]) return false;
    return true;
  });
}

// ---------------------------------------------------------------------------
// Enumeration

/// Every frame over the given agents with 1..max_worlds worlds named w1, w2,
/// ... Each agent's relation ranges over all partitions of all subsets.
inline std::vector<PartialEpistemicFrame> enumerate_frames(const std::vector<std::string>& agents, std::size_t max_worlds) {
  std::vector<PartialEpistemicFrame> out;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    std::vector<std::string> worlds;
    for (std::size_t w = 0; w < n; ++w) worlds.push_back("w" + std::to_string(w + 1));

    // Partial partitions as restricted-growth labels; 0 means outside dom.
    std::vector<PartialEpistemicFrame::Classes> partials;
    std::vector<std::size_t> label(n, 0);
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t w, std::size_t used) {
      if (w == n) {
        PartialEpistemicFrame::Classes cls(used);
        for (std::size_t i = 0; i < n; ++i)
          if (label[i]) cls[label[i] - 1].push_back(i);
        partials.push_back(std::move(cls));
        return;
      }
      for (std::size_t l = 0; l <= used + 1; ++l) {
        label[w] = l;
        grow(w + 1, std::max(used, l));
      }
    };
    grow(0, 0);

    std::vector<std::size_t> pick(agents.size(), 0);
    std::function<void(std::size_t)> combine = [&](std::size_t a) {
      if (a == agents.size()) {
        std::vector<bool> covered(n, false);
        std::vector<PartialEpistemicFrame::Classes> classes;
        for (std::size_t b = 0; b < agents.size(); ++b) {
          classes.push_back(partials[pick[b]]);
          for (const auto& c : classes.back())
            for (auto w : c) covered[w] = true;
        }
        if (std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }))
          out.push_back(PartialEpistemicFrame::create(agents, worlds, std::move(classes)));
        return;
      }
      for (std::size_t i = 0; i < partials.size(); ++i) {
        pick[a] = i;
        combine(a + 1);
      }
    };
    combine(0);
  }
  return out;
}

/// Every valuation of `atoms` on the frame's worlds.
inline std::vector<PartialEpistemicModel> enumerate_frame_models(const PartialEpistemicFrame& fr,
                                                                 const std::vector<std::string>& atoms) {
  std::vector<PartialEpistemicModel> out;
  const std::size_t bits = atoms.size() * fr.world_count();
  if (bits >= 24) throw Error(ErrorKind::Bounds, "too many valuations to enumerate");
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    std::vector<std::vector<bool>> env(atoms.size(), std::vector<bool>(fr.world_count()));
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t w = 0; w < fr.world_count(); ++w) env[i][w] = (mask >> (i * fr.world_count() + w)) & 1;
    out.emplace_back(fr, atoms, std::move(env));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frame text format
//
//   agents: a, b          (optional; otherwise agents in order of appearance)
//   worlds: w1, w2, w3
//   class a: w1, w2
//   env solo: w1, w3

inline PartialEpistemicModel parse_frame(std::string_view text) {
  detail::TextCursor cur(text);
  std::optional<std::vector<std::string>> agents, worlds;
  std::vector<std::string> class_agents;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, SourceSpan>>>> class_lines;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, SourceSpan>>>> env_lines;

  auto spanned_list = [&]() {
    std::vector<std::pair<std::string, SourceSpan>> out;
    if (cur.at_eol()) return out;
    do {
      cur.skip_blanks();
      const auto at = cur.mark();
      std::string name = cur.name(true, "a world name");
      out.emplace_back(std::move(name), cur.from(at));
    } while (cur.accept(','));
    return out;
  };
  auto plain_list = [&](bool dotted) {
    std::vector<std::string> out;
    if (cur.at_eol()) return out;
    do out.push_back(cur.name(dotted, "a name"));
    while (cur.accept(','));
    return out;
  };

  while (!cur.at_end()) {
    if (cur.at_eol()) {
      cur.skip_line();
      continue;
    }
    const SourceSpan start = cur.mark();
    const std::string keyword = cur.name(false, "a declaration");
    if (keyword == "agents") {
      if (agents) cur.fail("agents declared twice");
      cur.expect(':');
      agents = plain_list(false);
    } else if (keyword == "worlds") {
      if (worlds) cur.fail("worlds declared twice");
      cur.expect(':');
      worlds = plain_list(true);
    } else if (keyword == "class") {
      std::string agent = cur.name(false, "an agent name");
      cur.expect(':');
      if (std::find(class_agents.begin(), class_agents.end(), agent) == class_agents.end()) class_agents.push_back(agent);
      class_lines.emplace_back(std::move(agent), spanned_list());
    } else if (keyword == "env") {
      std::string atom = cur.name(false, "an atom name");
      cur.expect(':');
      for (const auto& [name, _] : env_lines)
        if (name == atom) throw ParseError(ErrorKind::Syntax, "atom " + atom + " declared twice", cur.from(start));
      env_lines.emplace_back(std::move(atom), spanned_list());
    } else {
      throw ParseError(ErrorKind::Syntax, "unknown declaration '" + keyword + "'", cur.from(start));
    }
    if (!cur.at_eol()) cur.fail("expected end of line" + cur.found());
  }
  if (!worlds) throw ParseError(ErrorKind::Syntax, "missing 'worlds:' declaration", cur.mark());
  if (!agents) agents = class_agents;

  auto world_index = [&](const std::pair<std::string, SourceSpan>& w) {
    auto it = std::find(worlds->begin(), worlds->end(), w.first);
    if (it == worlds->end()) throw ParseError(ErrorKind::UnknownPoint, "unknown world '" + w.first + "'", w.second);
    return static_cast<std::size_t>(it - worlds->begin());
  };
  std::vector<PartialEpistemicFrame::Classes> classes(agents->size());
  for (const auto& [agent, members] : class_lines) {
    auto it = std::find(agents->begin(), agents->end(), agent);
    if (it == agents->end()) throw ParseError(ErrorKind::UnknownAgent, "class for undeclared agent '" + agent + "'", cur.mark());
    std::vector<std::size_t> cls;
    for (const auto& w : members) cls.push_back(world_index(w));
    classes[static_cast<std::size_t>(it - agents->begin())].push_back(std::move(cls));
  }
  std::vector<std::string> atoms;
  std::vector<std::vector<bool>> env;
  for (const auto& [atom, members] : env_lines) {
    atoms.push_back(atom);
    env.emplace_back(worlds->size(), false);
    for (const auto& w : members) env.back()[world_index(w)] = true;
  }
  return PartialEpistemicModel(PartialEpistemicFrame::create(*agents, *worlds, std::move(classes)), std::move(atoms),
                               std::move(env));
}

inline std::string render_frame(const PartialEpistemicModel& m) {
  const auto& fr = m.frame;
  std::string out = "agents: " + detail::join_names(fr.agents()) + "\n";
  out += "worlds: " + detail::join_names(fr.worlds()) + "\n";
  for (std::size_t a = 0; a < fr.agent_count(); ++a)
    for (const auto& cls : fr.classes(a)) {
      std::vector<std::string> names;
      for (auto w : cls) names.push_back(fr.worlds()[w]);
      out += "class " + fr.agents()[a] + ": " + detail::join_names(names) + "\n";
    }
  for (std::size_t i = 0; i < m.env_atoms.size(); ++i) {
    std::vector<std::string> names;
    for (std::size_t w = 0; w < fr.world_count(); ++w)
      if (m.env[i][w]) names.push_back(fr.worlds()[w]);
    out += "env " + m.env_atoms[i] + ":" + (names.empty() ? "" : " " + detail::join_names(names)) + "\n";
  }
  return out;
}

}  // namespace hyperknow

#endif  // HYPERKNOW_FRAMES_HPP
