#ifndef HYPERKNOW_SEARCH_HPP
#define HYPERKNOW_SEARCH_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperknow/core.hpp"
#include "hyperknow/formula.hpp"
#include "hyperknow/parser.hpp"
#include "hyperknow/semantics.hpp"

namespace hyperknow {

struct SearchCaps {
  std::size_t agents = 3;
  std::size_t views = 3;
  std::size_t edges = 5;
};

/// Hard caps, optionally raised through HYPERKNOW_MAX_BOUNDS="A,V,E".
inline SearchCaps search_caps() {
  SearchCaps caps;
  if (const char* env = std::getenv("HYPERKNOW_MAX_BOUNDS")) {
    std::stringstream in(env);
    std::string part;
    std::vector<std::size_t> values;
    while (std::getline(in, part, ',')) {
      try {
        values.push_back(static_cast<std::size_t>(std::stoul(part)));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Bounds, "HYPERKNOW_MAX_BOUNDS must look like A,V,E");
      }
    }
    if (values.size() != 3) throw Error(ErrorKind::Bounds, "HYPERKNOW_MAX_BOUNDS must look like A,V,E");
    caps = {std::max(caps.agents, values[0]), std::max(caps.views, values[1]), std::max(caps.edges, values[2])};
  }
  return caps;
}

struct Bounds {
  std::size_t agents = 2;
  std::size_t views = 2;        // per agent
  std::size_t edges = 4;
  std::size_t agent_atoms = 2;  // per agent
  std::size_t env_atoms = 2;
  std::size_t depth = 2;        // instantiation depth; subsumed by subset assignments

  void validate() const {
    const auto caps = search_caps();
    if (agents == 0 || views == 0 || edges == 0) throw Error(ErrorKind::Bounds, "bounds must be positive");
    if (agents > caps.agents || views > caps.views || edges > caps.edges)
      throw Error(ErrorKind::Bounds, "bounds exceed the hard caps (agents " + std::to_string(caps.agents) + ", views " +
                                         std::to_string(caps.views) + ", edges " + std::to_string(caps.edges) + ")");
    if (agent_atoms > 2 || env_atoms > 2) throw Error(ErrorKind::Bounds, "at most 2 atoms per sort");
  }
};

/// Agents a, b, c, ...; agent atoms p_<agent>, q_<agent>; env atoms p, q.
inline Signature default_signature(const Bounds& b) {
  static const std::vector<std::string> letters{"a", "b", "c", "d", "e", "f", "g", "h"};
  static const std::vector<std::string> stems{"p", "q"};
  if (b.agents > letters.size()) throw Error(ErrorKind::Bounds, "too many agents for the default signature");
  std::vector<std::string> agents(letters.begin(), letters.begin() + static_cast<long>(b.agents));
  std::vector<std::vector<std::string>> agent_atoms(b.agents);
  for (std::size_t a = 0; a < b.agents; ++a)
    for (std::size_t i = 0; i < b.agent_atoms && i < stems.size(); ++i) agent_atoms[a].push_back(stems[i] + "_" + agents[a]);
  std::vector<std::string> env(stems.begin(), stems.begin() + static_cast<long>(std::min(b.env_atoms, stems.size())));
  return Signature(std::move(agents), std::move(agent_atoms), std::move(env));
}

// ---------------------------------------------------------------------------
// Enumeration

/// Calls fn on every chromatic hypergraph over sig's agents with 0..views
/// views per agent and 1..edges edges. Edges are enumerated as multisets of
/// incidence rows, so relabelings of edges are not repeated; relabelings of
/// views may be. Stops early when fn returns false.
inline void for_each_hypergraph(const Signature& sig, const Bounds& b,
                                const std::function<bool(const ChromaticHypergraph&)>& fn) {
  b.validate();
  const std::size_t n = sig.agent_count();
  if (n > search_caps().agents) throw Error(ErrorKind::Bounds, "signature has more agents than the cap");
  std::vector<std::size_t> counts(n, 0);
  bool stop = false;

  auto run_counts = [&]() {
    // Rows: one optional view per agent, at least one alive.
    std::vector<std::vector<std::optional<ViewId>>> rows;
    std::vector<std::optional<ViewId>> row(n);
    std::function<void(std::size_t)> build = [&](std::size_t a) {
      if (a == n) {
        for (const auto& v : row)
          if (v) {
            rows.push_back(row);
            break;
          }
        return;
      }
      row[a] = std::nullopt;
      build(a + 1);
      for (std::size_t v = 0; v < counts[a]; ++v) {
        row[a] = ViewId(v);
        build(a + 1);
      }
    };
    build(0);
    if (rows.empty()) return;

    std::vector<std::vector<std::string>> view_names(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t v = 0; v < counts[a]; ++v) view_names[a].push_back(sig.agent_name(AgentId(a)) + std::to_string(v + 1));

    for (std::size_t m = 1; m <= b.edges && !stop; ++m) {
      std::vector<std::size_t> pick(m, 0);
      for (;;) {
        ProjectionTable proj;
        for (auto i : pick) proj.push_back(rows[i]);
        std::vector<std::string> edge_names;
        for (std::size_t e = 0; e < m; ++e) edge_names.push_back("e" + std::to_string(e + 1));
        if (hypergraph_violations(sig, view_names, edge_names, proj).empty()) {
          if (!fn(ChromaticHypergraph::create(sig, view_names, edge_names, proj))) {
            stop = true;
            return;
          }
        }
        // Next non-decreasing sequence.
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == rows.size() - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[i - 1];
      }
    }
  };

  std::function<void(std::size_t)> over_counts = [&](std::size_t a) {
    if (stop) return;
    if (a == n) {
      run_counts();
      return;
    }
    for (std::size_t c = 0; c <= b.views && !stop; ++c) {
      counts[a] = c;
      over_counts(a + 1);
    }
  };
  over_counts(0);
}

namespace detail {

inline std::size_t valuation_bits(const ChromaticHypergraph& h) {
  const auto& sig = h.signature();
  std::size_t bits = sig.env_atoms().size() * h.edge_count();
  for (std::size_t a = 0; a < sig.agent_count(); ++a) bits += sig.agent_atoms(AgentId(a)).size() * h.view_count(AgentId(a));
  return bits;
}

inline Valuation valuation_from_code(const ChromaticHypergraph& h, std::uint64_t code) {
  Valuation val = Valuation::empty_for(h);
  std::size_t bit = 0;
  for (auto& per_agent : val.agent)
    for (auto& row : per_agent)
      for (std::size_t v = 0; v < row.size(); ++v) row[v] = (code >> bit++) & 1;
  for (auto& row : val.env)
    for (std::size_t e = 0; e < row.size(); ++e) row[e] = (code >> bit++) & 1;
  return val;
}

}  // namespace detail

/// Every model within bounds: each hypergraph with every valuation of sig.
inline void for_each_model(const Signature& sig, const Bounds& b, const std::function<bool(const Model&)>& fn) {
  for_each_hypergraph(sig, b, [&](const ChromaticHypergraph& h) {
    const std::size_t bits = detail::valuation_bits(h);
    if (bits > 24) throw Error(ErrorKind::Bounds, "too many valuations to enumerate");
    auto shared = std::make_shared<const ChromaticHypergraph>(h);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code)
      if (!fn(Model(shared, detail::valuation_from_code(h, code)))) return false;
    return true;
  });
}

inline std::vector<Model> enumerate_models(const Bounds& b, const Signature& sig) {
  std::vector<Model> out;
  for_each_model(sig, b, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline std::vector<Model> enumerate_models(const Bounds& b) { return enumerate_models(b, default_signature(b)); }

// ---------------------------------------------------------------------------
// Bitmask evaluation of core formulas, with atoms read from an assignment.

namespace detail {

using Mask = std::uint64_t;

class MaskEvaluator {
 public:
  explicit MaskEvaluator(const ChromaticHypergraph& h) : h_(h) {
    if (h.edge_count() > 64) throw Error(ErrorKind::Bounds, "too many edges for mask evaluation");
    fiber_.resize(h.agent_count());
    for (std::size_t a = 0; a < h.agent_count(); ++a) {
      if (h.view_count(AgentId(a)) > 64) throw Error(ErrorKind::Bounds, "too many views for mask evaluation");
      fiber_[a].assign(h.view_count(AgentId(a)), 0);
      for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (auto v = h.proj(EdgeId(e), AgentId(a))) fiber_[a][v->index()] |= Mask{1} << e;
    }
  }

  std::size_t points(std::size_t sort) const {
    return sort == 0 ? h_.edge_count() : h_.view_count(AgentId(sort - 1));
  }
  Mask all(std::size_t sort) const {
    const auto n = points(sort);
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  /// env[i] / agent[a][i] are the extensions of the signature's atoms.
  Mask eval(const Formula& x, std::size_t sort, const std::vector<Mask>& env, const std::vector<std::vector<Mask>>& agent) const {
    switch (x.kind()) {
      case Kind::True: return all(sort);
      case Kind::False: return 0;
      case Kind::Atom: {
        const auto& ref = *x.atom_ref();
        return ref.agent ? agent[ref.agent->index()][ref.index] : env[ref.index];
      }
      case Kind::Not: return all(sort) & ~eval(x.operand(), sort, env, agent);
      case Kind::And: return eval(x.lhs(), sort, env, agent) & eval(x.rhs(), sort, env, agent);
      case Kind::Diamond: {
        const auto a = x.agent_id()->index();
        const Mask inner = eval(x.operand(), 0, env, agent);
        Mask out = 0;
        for (std::size_t v = 0; v < fiber_[a].size(); ++v)
          if (fiber_[a][v] & inner) out |= Mask{1} << v;
        return out;
      }
      case Kind::SomeView: {
        const auto a = x.agent_id()->index();
        const Mask inner = eval(x.operand(), a + 1, env, agent);
        Mask out = 0;
        for (std::size_t e = 0; e < h_.edge_count(); ++e)
          if (auto v = h_.proj(EdgeId(e), AgentId(a)); v && ((inner >> v->index()) & 1)) out |= Mask{1} << e;
        return out;
      }
      default: throw Error(ErrorKind::SortError, "mask evaluation expects a core formula");
    }
  }

 private:
  const ChromaticHypergraph& h_;
  std::vector<std::vector<Mask>> fiber_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Schemes and verdicts

/// A formula whose atoms are scheme metavariables: each ranges over every
/// subset of the points of its sort (edges for world atoms, V_a for atoms of
/// agent a). This covers every instantiation by formulas of any depth.
struct Scheme {
  Signature sig;
  Sort sort;
  Formula formula;  // sort-checked against sig
};

/// Parses a scheme over the given agents. Metavariables are declared with
/// their sort; "e" is not accepted as a sort name here, use Sort::world().
inline Scheme make_scheme(std::string_view text, const Sort& sort, const std::vector<std::string>& agents,
                          const std::vector<std::pair<std::string, Sort>>& metavariables) {
  std::vector<std::vector<std::string>> agent_atoms(agents.size());
  std::vector<std::string> env;
  for (const auto& [name, s] : metavariables) {
    if (s.is_world()) {
      env.push_back(name);
      continue;
    }
    auto it = std::find(agents.begin(), agents.end(), *s.agent);
    if (it == agents.end()) throw Error(ErrorKind::UnknownAgent, "metavariable " + name + " has unknown sort " + *s.agent);
    agent_atoms[static_cast<std::size_t>(it - agents.begin())].push_back(name);
  }
  Signature sig(agents, std::move(agent_atoms), std::move(env));
  Formula x = parse_formula(text, sort, sig);
  return Scheme{std::move(sig), sort, std::move(x)};
}

inline Scheme make_scheme(const Formula& x, const Sort& sort, const Signature& sig) {
  return Scheme{sig, sort, desugar(sort_check(x, sort, sig))};
}

struct Countermodel {
  Model model;     // valuation = the metavariable assignment
  EvalPoint point;
};

struct Verdict {
  std::optional<Countermodel> countermodel;
  std::size_t hypergraphs = 0;
  std::size_t assignments = 0;

  bool valid() const { return !countermodel.has_value(); }
};

/// Assignment of a countermodel as "X = {e1, e3}" lines.
inline std::string describe_assignment(const Model& m) {
  std::string out;
  const auto& sig = m.signature();
  const auto& h = m.hypergraph();
  auto set = [](const std::vector<std::string>& names) { return "{" + detail::join_names(names) + "}"; };
  for (std::size_t a = 0; a < sig.agent_count(); ++a)
    for (std::size_t i = 0; i < sig.agent_atoms(AgentId(a)).size(); ++i) {
      std::vector<std::string> names;
      for (std::size_t v = 0; v < h.view_count(AgentId(a)); ++v)
        if (m.valuation().agent[a][i][v]) names.push_back(h.view_name(AgentId(a), ViewId(v)));
      out += sig.agent_atoms(AgentId(a))[i] + " = " + set(names) + "\n";
    }
  for (std::size_t i = 0; i < sig.env_atoms().size(); ++i) {
    std::vector<std::string> names;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
      if (m.valuation().env[i][e]) names.push_back(h.edge_name(EdgeId(e)));
    out += sig.env_atoms()[i] + " = " + set(names) + "\n";
  }
  return out;
}

namespace detail {

/// First point of the scheme's sort where the formula fails, over every
/// assignment on one hypergraph.
inline std::optional<Countermodel> refute_on(const Scheme& s, const std::shared_ptr<const ChromaticHypergraph>& h,
                                             std::size_t& assignments) {
  const MaskEvaluator ev(*h);
  const std::size_t bits = valuation_bits(*h);
  if (bits > 24) throw Error(ErrorKind::Bounds, "too many metavariable assignments on one hypergraph");
  const std::size_t sort = s.sort.is_world() ? 0 : s.sig.find_agent(*s.sort.agent)->index() + 1;
  const Mask all = ev.all(sort);
  const auto& sig = h->signature();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    ++assignments;
    std::vector<std::vector<Mask>> agent(sig.agent_count());
    std::size_t bit = 0;
    for (std::size_t a = 0; a < sig.agent_count(); ++a)
      for (std::size_t i = 0; i < sig.agent_atoms(AgentId(a)).size(); ++i) {
        const std::size_t width = h->view_count(AgentId(a));
        agent[a].push_back(width ? (code >> bit) & ((Mask{1} << width) - 1) : 0);
        bit += width;
      }
    std::vector<Mask> env;
    for (std::size_t i = 0; i < sig.env_atoms().size(); ++i) {
      env.push_back((code >> bit) & ((Mask{1} << h->edge_count()) - 1));
      bit += h->edge_count();
    }
    const Mask holds = ev.eval(s.formula, sort, env, agent);
    if (holds == all) continue;
    std::size_t p = 0;
    while ((holds >> p) & 1) ++p;
    const EvalPoint point = sort == 0 ? EvalPoint::world(EdgeId(p)) : EvalPoint::view(AgentId(sort - 1), ViewId(p));
    return Countermodel{Model(h, valuation_from_code(*h, code)), point};
  }
  return std::nullopt;
}

}  // namespace detail

/// Sweeps every hypergraph within bounds and every assignment; returns the
/// first countermodel in stream order. Bounds' atom counts and depth are not
/// used: metavariables range over all subsets.
inline Verdict check_scheme(const Scheme& s, const Bounds& b) {
  Verdict verdict;
  for_each_hypergraph(s.sig, b, [&](const ChromaticHypergraph& h) {
    ++verdict.hypergraphs;
    auto shared = std::make_shared<const ChromaticHypergraph>(h);
    if (auto cm = detail::refute_on(s, shared, verdict.assignments)) {
      verdict.countermodel = std::move(cm);
      return false;
    }
    return true;
  });
  return verdict;
}

// ---------------------------------------------------------------------------
// Minimization

namespace detail {

/// Removes the given edges and views (dead views are also dropped when they
/// lose every edge); edges left with no alive agent go too.
inline std::optional<Model> shrink(const Model& m, std::optional<std::size_t> drop_edge,
                                   std::optional<std::pair<std::size_t, std::size_t>> drop_view) {
  const auto& h = m.hypergraph();
  const auto& sig = m.signature();
  const std::size_t n = sig.agent_count();
  std::vector<std::size_t> kept_edges;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (drop_edge == e) continue;
    bool any = false;
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = h.proj(EdgeId(e), AgentId(a));
      if (v && !(drop_view && drop_view->first == a && drop_view->second == v->index())) any = true;
    }
    if (any) kept_edges.push_back(e);
  }
  if (kept_edges.empty()) return std::nullopt;
  std::vector<std::vector<long>> remap(n);
  std::vector<std::vector<std::string>> views(n);
  std::vector<std::vector<std::size_t>> kept_views(n);
  for (std::size_t a = 0; a < n; ++a) {
    remap[a].assign(h.view_count(AgentId(a)), -1);
    for (std::size_t v = 0; v < h.view_count(AgentId(a)); ++v) {
      if (drop_view && drop_view->first == a && drop_view->second == v) continue;
      bool hit = false;
      for (auto e : kept_edges) hit = hit || h.proj(EdgeId(e), AgentId(a)) == ViewId(v);
      if (!hit) continue;
      remap[a][v] = static_cast<long>(views[a].size());
      views[a].push_back(h.view_name(AgentId(a), ViewId(v)));
      kept_views[a].push_back(v);
    }
  }
  ProjectionTable proj;
  std::vector<std::string> edges;
  for (auto e : kept_edges) {
    std::vector<std::optional<ViewId>> row(n);
    for (std::size_t a = 0; a < n; ++a)
      if (auto v = h.proj(EdgeId(e), AgentId(a)); v && remap[a][v->index()] >= 0)
        row[a] = ViewId(static_cast<std::size_t>(remap[a][v->index()]));
    proj.push_back(std::move(row));
    edges.push_back(h.edge_name(EdgeId(e)));
  }
  auto smaller = ChromaticHypergraph::create(sig, std::move(views), std::move(edges), std::move(proj));
  Valuation val = Valuation::empty_for(smaller);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < val.agent[a].size(); ++i)
      for (std::size_t v = 0; v < kept_views[a].size(); ++v) val.agent[a][i][v] = m.valuation().agent[a][i][kept_views[a][v]];
  for (std::size_t i = 0; i < val.env.size(); ++i)
    for (std::size_t e = 0; e < kept_edges.size(); ++e) val.env[i][e] = m.valuation().env[i][kept_edges[e]];
  return Model(std::move(smaller), std::move(val));
}

inline std::optional<EvalPoint> failing_point(const Model& m, const Sort& sort, const Formula& x) {
  return first_failure(m, sort, x);
}

}  // namespace detail

/// Greedy: drop edges while the formula still fails somewhere, then views;
/// repeat until no single deletion keeps it failing.
inline Countermodel minimize(Countermodel cm, const Sort& sort, const Formula& x) {
  bool progress = true;
  while (progress) {
    progress = false;
    const auto& h = cm.model.hypergraph();
    for (std::size_t e = 0; e < h.edge_count() && !progress; ++e) {
      auto smaller = detail::shrink(cm.model, e, std::nullopt);
      if (!smaller) continue;
      if (auto p = detail::failing_point(*smaller, sort, x)) {
        cm = Countermodel{std::move(*smaller), *p};
        progress = true;
      }
    }
    if (progress) continue;
    for (std::size_t a = 0; a < h.agent_count() && !progress; ++a)
      for (std::size_t v = 0; v < h.view_count(AgentId(a)) && !progress; ++v) {
        auto smaller = detail::shrink(cm.model, std::nullopt, std::pair{a, v});
        if (!smaller) continue;
        if (auto p = detail::failing_point(*smaller, sort, x)) {
          cm = Countermodel{std::move(*smaller), *p};
          progress = true;
        }
      }
  }
  return cm;
}

/// The signature cut down to the atoms occurring in x, in declaration order.
/// Atoms that do not occur would only multiply the assignments.
inline Signature restrict_to_used(const Signature& sig, const Formula& x, const Sort& sort) {
  const auto used = atoms_of(sort_check(x, sort, sig), sort);
  std::vector<std::vector<std::string>> agent_atoms(sig.agent_count());
  for (std::size_t a = 0; a < sig.agent_count(); ++a) {
    const auto it = used.agent.find(sig.agent_name(AgentId(a)));
    for (const auto& p : sig.agent_atoms(AgentId(a)))
      if (it != used.agent.end() && it->second.count(p)) agent_atoms[a].push_back(p);
  }
  std::vector<std::string> env;
  for (const auto& p : sig.env_atoms())
    if (used.env.count(p)) env.push_back(p);
  return Signature(sig.agents(), std::move(agent_atoms), std::move(env));
}

/// Countermodel search for one formula: its atoms are read as metavariables
/// (so valuations range over all assignments), and the first countermodel is
/// minimized.
inline Verdict find_countermodel(const Formula& x, const Sort& sort, const Signature& sig, const Bounds& b) {
  const Scheme s = make_scheme(x, sort, restrict_to_used(sig, x, sort));
  Verdict verdict = check_scheme(s, b);
  if (verdict.countermodel) verdict.countermodel = minimize(std::move(*verdict.countermodel), sort, s.formula);
  return verdict;
}

inline Verdict find_countermodel(const Formula& x, const Bounds& b) {
  return find_countermodel(x, Sort::world(), default_signature(b), b);
}

/// Re-evaluates a countermodel with the ordinary evaluator.
inline bool recheck_false(const Countermodel& cm, const Formula& x) {
  if (cm.point.agent) return !sat_agent(cm.model, *cm.point.agent, ViewId(cm.point.index), x);
  return !sat_world(cm.model, EdgeId(cm.point.index), x);
}

}  // namespace hyperknow

#endif  // HYPERKNOW_SEARCH_HPP
