#ifndef HYPERKNOW_SEMANTICS_HPP
#define HYPERKNOW_SEMANTICS_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknow/core.hpp"
#include "hyperknow/formula.hpp"

namespace hyperknow {

/// A world (edge) or an agent's point of view.
struct EvalPoint {
  std::optional<AgentId> agent;  // empty for worlds
  std::size_t index = 0;         // EdgeId or ViewId

  static EvalPoint world(EdgeId e) { return {std::nullopt, e.index()}; }
  static EvalPoint view(AgentId a, ViewId v) { return {a, v.index()}; }
  bool is_world() const { return !agent.has_value(); }

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

/// Evaluates sort-checked formulas on one model. Results are memoized per
/// formula node as whole extensions, so repeated queries on shared subterms
/// are cheap. Not thread-safe; use one evaluator per thread.
class Evaluator {
 public:
  explicit Evaluator(const Model& m) : m_(m), h_(m.hypergraph()) {}

  bool world(EdgeId e, const Formula& x) { return extension(x, 0)[e.index()]; }
  bool agent(AgentId a, ViewId v, const Formula& x) { return extension(x, a.index() + 1)[v.index()]; }
  bool at(const EvalPoint& p, const Formula& x) {
    return p.is_world() ? world(EdgeId(p.index), x) : agent(*p.agent, ViewId(p.index), x);
  }

  /// Truth values at every point of the sort: edges for 0, views of agent
  /// s-1 otherwise.
  const std::vector<bool>& extension(const Formula& x, std::size_t sort) {
    const auto key = std::make_pair(x.node(), sort);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.second;
    std::vector<bool> ext = compute(x, sort);
    auto [it, _] = memo_.emplace(key, std::make_pair(x, std::move(ext)));
    return it->second.second;
  }

 private:
  std::size_t points(std::size_t sort) const {
    return sort == 0 ? h_.edge_count() : h_.view_count(AgentId(sort - 1));
  }

  AgentId agent_of(const Formula& x) const {
    if (x.agent_id()) return *x.agent_id();
    throw SortError(ErrorKind::SortError, "formula was not sort-checked (unresolved agent " + x.name() + ")", x.span());
  }

  // Truth of "[]_a X" at every view of a.
  std::vector<bool> box_views(AgentId a, const Formula& x) {
    const auto& inner = extension(x, 0);
    std::vector<bool> out(h_.view_count(a), true);
    for (std::size_t v = 0; v < out.size(); ++v)
      for (auto e : h_.fiber(a, ViewId(v)))
        if (!inner[e.index()]) {
          out[v] = false;
          break;
        }
    return out;
  }

  // Lifts a per-view extension of agent a to edges; `dead` is the value where
  // a has no view.
  std::vector<bool> lift(AgentId a, const std::vector<bool>& views, bool dead) const {
    std::vector<bool> out(h_.edge_count(), dead);
    for (std::size_t e = 0; e < out.size(); ++e)
      if (auto v = h_.proj(EdgeId(e), a)) out[e] = views[v->index()];
    return out;
  }

  std::vector<bool> compute(const Formula& x, std::size_t sort) {
    const std::size_t n = points(sort);
    switch (x.kind()) {
      case Kind::True: return std::vector<bool>(n, true);
      case Kind::False: return std::vector<bool>(n, false);
      case Kind::Atom: {
        const auto& ref = x.atom_ref();
        if (!ref) throw SortError(ErrorKind::SortError, "formula was not sort-checked (unresolved atom " + x.name() + ")", x.span());
        if (sort == 0) {
          if (ref->agent) throw SortError(ErrorKind::WrongSortAtom, "agent atom " + x.name() + " at a world", x.span());
          return m_.valuation().env.at(ref->index);
        }
        if (!ref->agent || ref->agent->index() != sort - 1)
          throw SortError(ErrorKind::WrongSortAtom, "atom " + x.name() + " evaluated at a view of another sort", x.span());
        return m_.valuation().agent.at(sort - 1).at(ref->index);
      }
      case Kind::Not: {
        std::vector<bool> out = extension(x.operand(), sort);
        out.flip();
        return out;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: {
        std::vector<bool> out = extension(x.lhs(), sort);
        const auto& r = extension(x.rhs(), sort);
        for (std::size_t i = 0; i < n; ++i) {
          if (x.kind() == Kind::And) out[i] = out[i] && r[i];
          else if (x.kind() == Kind::Or) out[i] = out[i] || r[i];
          else out[i] = !out[i] || r[i];
        }
        return out;
      }
      case Kind::Diamond:
      case Kind::Box: {
        const AgentId a = agent_of(x);
        if (sort != a.index() + 1)
          throw SortError(ErrorKind::AgentMismatch, "modality of agent " + x.name() + " evaluated at a foreign point", x.span());
        if (x.kind() == Kind::Box) return box_views(a, x.operand());
        const auto& inner = extension(x.operand(), 0);
        std::vector<bool> out(n, false);
        for (std::size_t v = 0; v < n; ++v)
          for (auto e : h_.fiber(a, ViewId(v)))
            if (inner[e.index()]) {
              out[v] = true;
              break;
            }
        return out;
      }
      case Kind::SomeView:
      case Kind::AllViews: {
        const AgentId a = agent_of(x);
        if (sort != 0) throw SortError(ErrorKind::SortError, "world modality evaluated at a view", x.span());
        return lift(a, extension(x.operand(), a.index() + 1), x.kind() == Kind::AllViews);
      }
      case Kind::Alive: {
        const AgentId a = agent_of(x);
        return lift(a, std::vector<bool>(h_.view_count(a), true), false);
      }
      case Kind::Ksafe:
      case Kind::Kunsafe: {
        const AgentId a = agent_of(x);
        return lift(a, box_views(a, x.operand()), x.kind() == Kind::Kunsafe);
      }
    }
    return std::vector<bool>(n, false);
  }

  const Model& m_;
  const ChromaticHypergraph& h_;
  std::map<std::pair<const FormulaNode*, std::size_t>, std::pair<Formula, std::vector<bool>>> memo_;
};

inline bool sat_world(const Model& m, EdgeId e, const Formula& x) {
  if (e.index() >= m.hypergraph().edge_count()) throw Error(ErrorKind::UnknownPoint, "edge index out of range");
  Evaluator ev(m);
  return ev.world(e, sort_check(x, Sort::world(), m.signature()));
}

inline bool sat_world(const Model& m, std::string_view edge, const Formula& x) {
  return sat_world(m, require_edge(m.hypergraph(), edge), x);
}

inline bool sat_agent(const Model& m, AgentId a, ViewId v, const Formula& x) {
  const auto& h = m.hypergraph();
  if (a.index() >= h.agent_count() || v.index() >= h.view_count(a))
    throw Error(ErrorKind::UnknownPoint, "view index out of range");
  Evaluator ev(m);
  return ev.agent(a, v, sort_check(x, Sort::of(m.signature().agent_name(a)), m.signature()));
}

inline bool sat_agent(const Model& m, std::string_view agent, std::string_view view, const Formula& x) {
  const auto a = require_agent(m.signature(), agent);
  return sat_agent(m, a, require_view(m.hypergraph(), a, view), x);
}

inline std::vector<EdgeId> extension_world(const Model& m, const Formula& x) {
  Evaluator ev(m);
  const auto& ext = ev.extension(sort_check(x, Sort::world(), m.signature()), 0);
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < ext.size(); ++e)
    if (ext[e]) out.push_back(EdgeId(e));
  return out;
}

inline std::vector<ViewId> extension_agent(const Model& m, AgentId a, const Formula& x) {
  Evaluator ev(m);
  const auto& ext = ev.extension(sort_check(x, Sort::of(m.signature().agent_name(a)), m.signature()), a.index() + 1);
  std::vector<ViewId> out;
  for (std::size_t v = 0; v < ext.size(); ++v)
    if (ext[v]) out.push_back(ViewId(v));
  return out;
}

inline bool valid_in_model(const Model& m, const Formula& x) {
  return extension_world(m, x).size() == m.hypergraph().edge_count();
}

/// Validity of an agent formula at every view of its agent.
inline bool valid_in_model(const Model& m, AgentId a, const Formula& x) {
  return extension_agent(m, a, x).size() == m.hypergraph().view_count(a);
}

/// First point where the formula of the given sort fails, if any.
inline std::optional<EvalPoint> first_failure(const Model& m, const Sort& sort, const Formula& x) {
  Evaluator ev(m);
  const Formula checked = sort_check(x, sort, m.signature());
  const std::size_t s = sort.is_world() ? 0 : require_agent(m.signature(), *sort.agent).index() + 1;
  const auto& ext = ev.extension(checked, s);
  for (std::size_t i = 0; i < ext.size(); ++i)
    if (!ext[i]) return s == 0 ? EvalPoint::world(EdgeId(i)) : EvalPoint::view(AgentId(s - 1), ViewId(i));
  return std::nullopt;
}

}  // namespace hyperknow

#endif  // HYPERKNOW_SEMANTICS_HPP
