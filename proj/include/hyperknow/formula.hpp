#ifndef HYPERKNOW_FORMULA_HPP
#define HYPERKNOW_FORMULA_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperknow/core.hpp"
#include "hyperknow/errors.hpp"

namespace hyperknow {

/// Formula constructors. The first seven are the core language (with True and
/// False as primitive leaves of every sort); the rest are derived forms that
/// desugar() expands.
enum class Kind {
  True,
  False,
  Atom,
  Not,
  And,
  Diamond,   // <>  agent a considers possible (agent sort, world operand)
  SomeView,  // E[a] there is a view of a (world sort, agent operand)
  Or,
  Implies,
  Box,       // []  := ~<>~
  AllViews,  // A[a] := ~E[a]~
  Alive,     // alive(a) := E[a] true
  Ksafe,     // Ksafe[a] := E[a] []
  Kunsafe,   // K[a] := A[a] []
};

inline bool is_derived(Kind k) { return k >= Kind::Or; }
inline bool is_binary(Kind k) { return k == Kind::And || k == Kind::Or || k == Kind::Implies; }
inline bool has_agent(Kind k) {
  switch (k) {
    case Kind::Diamond: case Kind::SomeView: case Kind::Box: case Kind::AllViews:
    case Kind::Alive: case Kind::Ksafe: case Kind::Kunsafe:
      return true;
    default:
      return false;
  }
}

class Formula;

struct FormulaNode {
  Kind kind = Kind::True;
  std::string name;  // atom name, or agent name of a modal node
  std::shared_ptr<const FormulaNode> lhs;
  std::shared_ptr<const FormulaNode> rhs;
  SourceSpan span;
  // Filled in by sort_check.
  std::optional<AtomRef> atom;
  std::optional<AgentId> agent;
};

/// Immutable formula value. Copies share structure; equality is structural
/// and ignores spans and resolution data.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  static Formula make(Kind kind, std::string name = {}, Formula lhs = {}, Formula rhs = {}, SourceSpan span = {}) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = kind;
    n->name = std::move(name);
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    n->span = span;
    return Formula(std::move(n));
  }

  bool is_null() const { return !node_; }
  explicit operator bool() const { return static_cast<bool>(node_); }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  /// The single operand of a unary node.
  Formula operand() const { return lhs(); }
  const SourceSpan& span() const { return node_->span; }
  const std::optional<AtomRef>& atom_ref() const { return node_->atom; }
  const std::optional<AgentId>& agent_id() const { return node_->agent; }
  const FormulaNode* node() const { return node_.get(); }
  const std::shared_ptr<const FormulaNode>& node_ptr() const { return node_; }

  friend bool operator==(const Formula& x, const Formula& y) { return equal(x.node_.get(), y.node_.get()); }

 private:
  static bool equal(const FormulaNode* x, const FormulaNode* y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return x->kind == y->kind && x->name == y->name && equal(x->lhs.get(), y->lhs.get()) &&
           equal(x->rhs.get(), y->rhs.get());
  }

  std::shared_ptr<const FormulaNode> node_;
};

/// Smart constructors.
namespace f {

inline Formula top() { return Formula::make(Kind::True); }
inline Formula bottom() { return Formula::make(Kind::False); }
inline Formula atom(std::string name) { return Formula::make(Kind::Atom, std::move(name)); }
inline Formula neg(Formula x) { return Formula::make(Kind::Not, {}, std::move(x)); }
inline Formula conj(Formula x, Formula y) { return Formula::make(Kind::And, {}, std::move(x), std::move(y)); }
inline Formula disj(Formula x, Formula y) { return Formula::make(Kind::Or, {}, std::move(x), std::move(y)); }
inline Formula implies(Formula x, Formula y) { return Formula::make(Kind::Implies, {}, std::move(x), std::move(y)); }
inline Formula diamond(std::string agent, Formula x) { return Formula::make(Kind::Diamond, std::move(agent), std::move(x)); }
inline Formula box(std::string agent, Formula x) { return Formula::make(Kind::Box, std::move(agent), std::move(x)); }
inline Formula exists(std::string agent, Formula x) { return Formula::make(Kind::SomeView, std::move(agent), std::move(x)); }
inline Formula forall(std::string agent, Formula x) { return Formula::make(Kind::AllViews, std::move(agent), std::move(x)); }
inline Formula alive(std::string agent) { return Formula::make(Kind::Alive, std::move(agent)); }
inline Formula ksafe(std::string agent, Formula x) { return Formula::make(Kind::Ksafe, std::move(agent), std::move(x)); }
inline Formula kunsafe(std::string agent, Formula x) { return Formula::make(Kind::Kunsafe, std::move(agent), std::move(x)); }

/// Left-nested disjunction; `bottom()` for an empty list.
inline Formula big_or(const std::vector<Formula>& xs) {
  if (xs.empty()) return bottom();
  Formula acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = disj(acc, xs[i]);
  return acc;
}

inline Formula big_and(const std::vector<Formula>& xs) {
  if (xs.empty()) return top();
  Formula acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = conj(acc, xs[i]);
  return acc;
}

}  // namespace f

/// Either the world sort or the sort of one agent.
struct Sort {
  std::optional<std::string> agent;

  static Sort world() { return {}; }
  static Sort of(std::string agent) { return {std::move(agent)}; }
  bool is_world() const { return !agent.has_value(); }
  std::string to_string() const { return agent ? "agent " + *agent : std::string("world"); }

  friend bool operator==(const Sort&, const Sort&) = default;
};

/// Sort of the operand of a modal node, given the sort the node itself has.
inline Sort operand_sort(Kind k, const std::string& agent, const Sort& outer) {
  switch (k) {
    case Kind::SomeView: case Kind::AllViews: return Sort::of(agent);
    case Kind::Diamond: case Kind::Box: case Kind::Ksafe: case Kind::Kunsafe: return Sort::world();
    default: return outer;
  }
}

namespace detail {

class SortChecker {
 public:
  explicit SortChecker(const Signature& sig) : sig_(sig) {}

  Formula check(const Formula& x, const Sort& sort) {
    auto key = std::make_pair(x.node(), sort.agent.value_or(std::string("\x01world")));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Formula out = rebuild(x, sort);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg, const Formula& at) const {
    throw SortError(kind, msg, at.span());
  }

  AgentId agent_of(const Formula& x) const {
    auto a = sig_.find_agent(x.name());
    if (!a) fail(ErrorKind::UnknownAgent, "unknown agent '" + x.name() + "'", x);
    return *a;
  }

  Formula rebuild(const Formula& x, const Sort& sort) {
    auto n = std::make_shared<FormulaNode>(*x.node());
    switch (x.kind()) {
      case Kind::True:
      case Kind::False:
        break;
      case Kind::Atom: {
        auto ref = sig_.find_atom(x.name());
        if (!ref) fail(ErrorKind::UnknownAtom, "unknown atom '" + x.name() + "'", x);
        if (sort.is_world() && ref->agent)
          fail(ErrorKind::WrongSortAtom,
               "atom '" + x.name() + "' of agent " + sig_.agent_name(*ref->agent) + " used in a world formula", x);
        if (!sort.is_world()) {
          if (!ref->agent)
            fail(ErrorKind::WrongSortAtom, "environment atom '" + x.name() + "' used in a formula of " + sort.to_string(), x);
          if (sig_.agent_name(*ref->agent) != *sort.agent)
            fail(ErrorKind::WrongSortAtom,
                 "atom '" + x.name() + "' of agent " + sig_.agent_name(*ref->agent) + " used in a formula of " +
                     sort.to_string(),
                 x);
        }
        n->atom = ref;
        break;
      }
      case Kind::Not:
        n->lhs = check(x.operand(), sort).node_ptr();
        break;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        n->lhs = check(x.lhs(), sort).node_ptr();
        n->rhs = check(x.rhs(), sort).node_ptr();
        break;
      case Kind::Diamond:
      case Kind::Box: {
        if (sort.is_world())
          fail(ErrorKind::SortError, std::string(x.kind() == Kind::Diamond ? "<>" : "[]") +
                                         " is an agent-level modality but occurs in a world formula", x);
        const auto a = agent_of(x);
        if (x.name() != *sort.agent)
          fail(ErrorKind::AgentMismatch,
               "modality of agent " + x.name() + " inside a formula of " + sort.to_string(), x);
        n->agent = a;
        n->lhs = check(x.operand(), Sort::world()).node_ptr();
        break;
      }
      case Kind::SomeView:
      case Kind::AllViews:
      case Kind::Alive:
      case Kind::Ksafe:
      case Kind::Kunsafe: {
        if (!sort.is_world())
          fail(ErrorKind::SortError, "world-level modality over agent " + x.name() + " occurs in a formula of " +
                                         sort.to_string(), x);
        n->agent = agent_of(x);
        if (x.kind() != Kind::Alive) n->lhs = check(x.operand(), operand_sort(x.kind(), x.name(), sort)).node_ptr();
        break;
      }
    }
    return Formula(std::move(n));
  }

  const Signature& sig_;
  std::map<std::pair<const FormulaNode*, std::string>, Formula> memo_;
};

}  // namespace detail

/// Checks that `x` is a well-sorted formula of `sort` over `sig` and returns a
/// copy with atoms and agents resolved. Throws SortError pointing at the
/// offending subterm.
inline Formula sort_check(const Formula& x, const Sort& sort, const Signature& sig) {
  if (!sort.is_world() && !sig.find_agent(*sort.agent))
    throw SortError(ErrorKind::UnknownAgent, "unknown agent '" + *sort.agent + "'", x ? std::optional(x.span()) : std::nullopt);
  detail::SortChecker checker(sig);
  return checker.check(x, sort);
}

namespace detail {

inline Formula copy_with(const Formula& x, Kind kind, std::string name, Formula lhs, Formula rhs) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  n->name = std::move(name);
  n->lhs = lhs.node_ptr();
  n->rhs = rhs.node_ptr();
  n->span = x.span();
  return Formula(std::move(n));
}

class Desugarer {
 public:
  Formula run(const Formula& x) {
    if (auto it = memo_.find(x.node()); it != memo_.end()) return it->second;
    Formula out = expand(x);
    memo_.emplace(x.node(), out);
    return out;
  }

 private:
  // Copies resolution data of `from` onto a freshly built node.
  static Formula resolved(Formula built, const Formula& from) {
    auto n = std::make_shared<FormulaNode>(*built.node());
    n->agent = from.agent_id();
    n->atom = from.atom_ref();
    n->span = from.span();
    return Formula(std::move(n));
  }
  Formula node(Kind k, const Formula& from, Formula lhs = {}, Formula rhs = {}) {
    return resolved(copy_with(from, k, has_agent(k) ? from.name() : std::string(), std::move(lhs), std::move(rhs)), from);
  }
  Formula neg(const Formula& from, Formula x) { return copy_with(from, Kind::Not, {}, std::move(x), {}); }
  Formula box(const Formula& from, Formula x) {
    return neg(from, resolved(copy_with(from, Kind::Diamond, from.name(), neg(from, std::move(x)), {}), from));
  }

  Formula expand(const Formula& x) {
    switch (x.kind()) {
      case Kind::True:
      case Kind::False:
      case Kind::Atom:
        return x;
      case Kind::Not:
        return node(Kind::Not, x, run(x.operand()));
      case Kind::And:
        return node(Kind::And, x, run(x.lhs()), run(x.rhs()));
      case Kind::Diamond:
        return node(Kind::Diamond, x, run(x.operand()));
      case Kind::SomeView:
        return node(Kind::SomeView, x, run(x.operand()));
      case Kind::Or:
        return neg(x, copy_with(x, Kind::And, {}, neg(x, run(x.lhs())), neg(x, run(x.rhs()))));
      case Kind::Implies:
        return neg(x, copy_with(x, Kind::And, {}, run(x.lhs()), neg(x, run(x.rhs()))));
      case Kind::Box:
        return box(x, run(x.operand()));
      case Kind::AllViews:
        return neg(x, node(Kind::SomeView, x, neg(x, run(x.operand()))));
      case Kind::Alive:
        return node(Kind::SomeView, x, copy_with(x, Kind::True, {}, {}, {}));
      case Kind::Ksafe:
        return node(Kind::SomeView, x, box(x, run(x.operand())));
      case Kind::Kunsafe:
        return neg(x, node(Kind::SomeView, x, neg(x, box(x, run(x.operand())))));
    }
    return x;
  }

  std::unordered_map<const FormulaNode*, Formula> memo_;
};

}  // namespace detail

/// Expands every derived form into the core language. Resolution data is
/// preserved, so a sort-checked input yields a sort-checked output.
inline Formula desugar(const Formula& x) {
  detail::Desugarer d;
  return d.run(x);
}

inline bool is_core(const Formula& x) {
  if (!x) return true;
  if (is_derived(x.kind())) return false;
  return is_core(x.lhs()) && is_core(x.rhs());
}

/// Nesting depth of modal operators, counted on the desugared form (so
/// Ksafe/Kunsafe count two, alive counts one).
inline std::size_t modal_depth(const Formula& x) {
  if (!x) return 0;
  const std::size_t below = std::max(modal_depth(x.lhs()), modal_depth(x.rhs()));
  switch (x.kind()) {
    case Kind::Diamond: case Kind::SomeView: case Kind::Box: case Kind::AllViews: case Kind::Alive:
      return below + 1;
    case Kind::Ksafe: case Kind::Kunsafe:
      return below + 2;
    default:
      return below;
  }
}

/// Number of nodes of the tree (shared subterms counted per occurrence).
inline std::size_t formula_size(const Formula& x) {
  if (!x) return 0;
  return 1 + formula_size(x.lhs()) + formula_size(x.rhs());
}

/// Occurring atoms, split by sort.
struct AtomOccurrences {
  std::set<std::string> env;
  std::map<std::string, std::set<std::string>> agent;

  friend bool operator==(const AtomOccurrences&, const AtomOccurrences&) = default;
};

inline void collect_atoms(const Formula& x, const Sort& sort, AtomOccurrences& out) {
  if (!x) return;
  if (x.kind() == Kind::Atom) {
    if (sort.is_world())
      out.env.insert(x.name());
    else
      out.agent[*sort.agent].insert(x.name());
    return;
  }
  const Sort inner = operand_sort(x.kind(), x.name(), sort);
  collect_atoms(x.lhs(), inner, out);
  collect_atoms(x.rhs(), inner, out);
}

inline AtomOccurrences atoms_of(const Formula& x, const Sort& sort) {
  AtomOccurrences out;
  collect_atoms(x, sort, out);
  return out;
}

/// Replaces atoms by formulas, keyed by atom name. Unmapped atoms stay.
inline Formula substitute(const Formula& x, const std::map<std::string, Formula>& subst) {
  if (!x) return x;
  if (x.kind() == Kind::Atom) {
    auto it = subst.find(x.name());
    return it == subst.end() ? x : it->second;
  }
  Formula l = substitute(x.lhs(), subst), r = substitute(x.rhs(), subst);
  if (l.node() == x.lhs().node() && r.node() == x.rhs().node()) return x;
  return detail::copy_with(x, x.kind(), x.name(), std::move(l), std::move(r));
}

/// Compact prefix serialization; equal strings iff structurally equal formulas.
inline void structural_key(const Formula& x, std::string& out) {
  if (!x) {
    out += '.';
    return;
  }
  out += static_cast<char>('A' + static_cast<int>(x.kind()));
  if (!x.name().empty()) {
    out += '"';
    out += x.name();
    out += '"';
  }
  if (x.kind() == Kind::True || x.kind() == Kind::False || x.kind() == Kind::Atom || x.kind() == Kind::Alive) return;
  structural_key(x.lhs(), out);
  if (is_binary(x.kind())) structural_key(x.rhs(), out);
}

inline std::string structural_key(const Formula& x) {
  std::string out;
  structural_key(x, out);
  return out;
}


// ---------------------------------------------------------------------------
// KB4 syntax: one knowledge modality per agent over environment atoms.

enum class Kb4Kind { True, False, Atom, Not, And, Knows };

struct Kb4Node {
  Kb4Kind kind = Kb4Kind::True;
  std::string name;  // atom name or agent name
  std::shared_ptr<const Kb4Node> lhs;
  std::shared_ptr<const Kb4Node> rhs;
  SourceSpan span;
};

class Kb4Formula {
 public:
  Kb4Formula() = default;
  explicit Kb4Formula(std::shared_ptr<const Kb4Node> node) : node_(std::move(node)) {}

  static Kb4Formula make(Kb4Kind kind, std::string name = {}, Kb4Formula lhs = {}, Kb4Formula rhs = {},
                         SourceSpan span = {}) {
    auto n = std::make_shared<Kb4Node>();
    n->kind = kind;
    n->name = std::move(name);
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    n->span = span;
    return Kb4Formula(std::move(n));
  }

  explicit operator bool() const { return static_cast<bool>(node_); }
  Kb4Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Kb4Formula lhs() const { return Kb4Formula(node_->lhs); }
  Kb4Formula rhs() const { return Kb4Formula(node_->rhs); }
  Kb4Formula operand() const { return lhs(); }
  const SourceSpan& span() const { return node_->span; }

  friend bool operator==(const Kb4Formula& x, const Kb4Formula& y) { return equal(x.node_.get(), y.node_.get()); }

 private:
  static bool equal(const Kb4Node* x, const Kb4Node* y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return x->kind == y->kind && x->name == y->name && equal(x->lhs.get(), y->lhs.get()) &&
           equal(x->rhs.get(), y->rhs.get());
  }

  std::shared_ptr<const Kb4Node> node_;
};

namespace kb4f {

inline Kb4Formula top() { return Kb4Formula::make(Kb4Kind::True); }
inline Kb4Formula bottom() { return Kb4Formula::make(Kb4Kind::False); }
inline Kb4Formula atom(std::string name) { return Kb4Formula::make(Kb4Kind::Atom, std::move(name)); }
inline Kb4Formula neg(Kb4Formula x) { return Kb4Formula::make(Kb4Kind::Not, {}, std::move(x)); }
inline Kb4Formula conj(Kb4Formula x, Kb4Formula y) { return Kb4Formula::make(Kb4Kind::And, {}, std::move(x), std::move(y)); }
inline Kb4Formula disj(Kb4Formula x, Kb4Formula y) { return neg(conj(neg(std::move(x)), neg(std::move(y)))); }
inline Kb4Formula implies(Kb4Formula x, Kb4Formula y) { return neg(conj(std::move(x), neg(std::move(y)))); }
inline Kb4Formula knows(std::string agent, Kb4Formula x) {
  return Kb4Formula::make(Kb4Kind::Knows, std::move(agent), std::move(x));
}

}  // namespace kb4f

/// Atoms must be environment atoms and agents must exist.
inline void sort_check(const Kb4Formula& x, const Signature& sig) {
  switch (x.kind()) {
    case Kb4Kind::True:
    case Kb4Kind::False:
      return;
    case Kb4Kind::Atom: {
      auto ref = sig.find_atom(x.name());
      if (!ref) throw SortError(ErrorKind::UnknownAtom, "unknown atom '" + x.name() + "'", x.span());
      if (ref->agent)
        throw SortError(ErrorKind::WrongSortAtom, "KB4 formulas only use environment atoms, '" + x.name() + "' belongs to agent " +
                                                      sig.agent_name(*ref->agent), x.span());
      return;
    }
    case Kb4Kind::Knows:
      if (!sig.find_agent(x.name())) throw SortError(ErrorKind::UnknownAgent, "unknown agent '" + x.name() + "'", x.span());
      sort_check(x.operand(), sig);
      return;
    case Kb4Kind::Not:
      sort_check(x.operand(), sig);
      return;
    case Kb4Kind::And:
      sort_check(x.lhs(), sig);
      sort_check(x.rhs(), sig);
      return;
  }
}

inline std::size_t modal_depth(const Kb4Formula& x) {
  if (!x) return 0;
  const std::size_t below = std::max(modal_depth(x.lhs()), modal_depth(x.rhs()));
  return x.kind() == Kb4Kind::Knows ? below + 1 : below;
}

}  // namespace hyperknow

#endif  // HYPERKNOW_FORMULA_HPP
