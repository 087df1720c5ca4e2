#ifndef HYPERKNOW_PROOF_HPP
#define HYPERKNOW_PROOF_HPP

#include <cctype>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknow/formula.hpp"
#include "hyperknow/parser.hpp"
#include "hyperknow/search.hpp"

namespace hyperknow {

enum class Rule {
  PropTaut,
  MP,
  NecA,
  NecE,
  RM,
  RMPrime,
  Adj1Down,
  Adj1Up,
  Adj2Down,
  Adj2Up,
  AxSurjectivity,
  AxFunctionality,
  AxNonEmptiness,
};

inline const std::vector<std::pair<Rule, std::string_view>>& rule_names() {
  static const std::vector<std::pair<Rule, std::string_view>> names{
      {Rule::PropTaut, "PropTaut"},         {Rule::MP, "MP"},
      {Rule::NecA, "NecA"},                 {Rule::NecE, "NecE"},
      {Rule::RM, "RM"},                     {Rule::RMPrime, "RMPrime"},
      {Rule::Adj1Down, "Adj1Down"},         {Rule::Adj1Up, "Adj1Up"},
      {Rule::Adj2Down, "Adj2Down"},         {Rule::Adj2Up, "Adj2Up"},
      {Rule::AxSurjectivity, "AxSurjectivity"}, {Rule::AxFunctionality, "AxFunctionality"},
      {Rule::AxNonEmptiness, "AxNonEmptiness"},
  };
  return names;
}

inline std::string_view to_string(Rule r) {
  for (const auto& [rule, name] : rule_names())
    if (rule == r) return name;
  return "?";
}

inline std::size_t premise_count(Rule r) {
  switch (r) {
    case Rule::PropTaut:
    case Rule::AxSurjectivity:
    case Rule::AxFunctionality:
    case Rule::AxNonEmptiness: return 0;
    case Rule::MP: return 2;
    default: return 1;
  }
}

struct Justification {
  Rule rule = Rule::PropTaut;
  std::vector<std::size_t> premises;  // 1-based line numbers
  std::optional<Kind> modality;       // RM: Diamond or Box; RMPrime: SomeView or AllViews
};

struct Statement {
  Sort sort;
  Formula formula;  // sort-checked core formula
};

struct DerivationLine {
  Statement statement;
  Justification justification;
  std::optional<SourceSpan> span;
};

struct Derivation {
  Signature sig;
  std::vector<DerivationLine> lines;
};

/// A rejected derivation line (1-based).
class CheckError : public Error {
 public:
  CheckError(ErrorKind kind, std::size_t line, const std::string& message, std::optional<SourceSpan> span = std::nullopt)
      : Error(kind, "line " + std::to_string(line) + ": " + message, span), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// Shape matching on core formulas

namespace detail {

inline std::optional<std::pair<Formula, Formula>> as_implication(const Formula& x) {
  if (x.kind() != Kind::Not || x.operand().kind() != Kind::And) return std::nullopt;
  const Formula body = x.operand();
  if (body.rhs().kind() != Kind::Not) return std::nullopt;
  return std::pair{body.lhs(), body.rhs().operand()};
}

/// ¬K(¬y) for K = Diamond (box) or SomeView (all views): returns (agent, y).
inline std::optional<std::pair<std::string, Formula>> as_dual(const Formula& x, Kind inner) {
  if (x.kind() != Kind::Not || x.operand().kind() != inner || x.operand().operand().kind() != Kind::Not)
    return std::nullopt;
  return std::pair{x.operand().name(), x.operand().operand().operand()};
}

inline std::optional<std::pair<std::string, Formula>> as_modal(const Formula& x, Kind kind) {
  if (x.kind() == Kind::Diamond || x.kind() == Kind::SomeView) {
    if (x.kind() == kind) return std::pair{x.name(), x.operand()};
    return std::nullopt;
  }
  if (kind == Kind::Box) return as_dual(x, Kind::Diamond);
  if (kind == Kind::AllViews) return as_dual(x, Kind::SomeView);
  return std::nullopt;
}

inline Formula apply(Kind modality, const std::string& agent, const Formula& x) {
  switch (modality) {
    case Kind::Diamond: return f::diamond(agent, x);
    case Kind::Box: return desugar(f::box(agent, x));
    case Kind::SomeView: return f::exists(agent, x);
    case Kind::AllViews: return desugar(f::forall(agent, x));
    default: throw Error(ErrorKind::RuleMismatch, "not a modality");
  }
}

inline Formula implication(const Formula& x, const Formula& y) { return desugar(f::implies(x, y)); }

inline std::string show(const Formula& x) { return render(x); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Propositional tautologies

namespace detail {

/// Atoms and maximal modal subformulas become propositional variables.
class PropAbstraction {
 public:
  explicit PropAbstraction(const Formula& x) { collect(x); }

  std::size_t variable_count() const { return vars_.size(); }

  bool eval(const Formula& x, std::uint32_t assignment) const {
    switch (x.kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Not: return !eval(x.operand(), assignment);
      case Kind::And: return eval(x.lhs(), assignment) && eval(x.rhs(), assignment);
      default: return (assignment >> vars_.at(structural_key(x))) & 1;
    }
  }

 private:
  void collect(const Formula& x) {
    switch (x.kind()) {
      case Kind::True:
      case Kind::False: return;
      case Kind::Not: collect(x.operand()); return;
      case Kind::And:
        collect(x.lhs());
        collect(x.rhs());
        return;
      default: vars_.emplace(structural_key(x), vars_.size());
    }
  }

  std::map<std::string, std::size_t> vars_;
};

}  // namespace detail

inline constexpr std::size_t kPropTautMaxVariables = 20;

/// Decides whether the propositional abstraction of a core formula is a
/// tautology; returns a falsifying assignment index otherwise.
inline bool is_prop_tautology(const Formula& x) {
  const detail::PropAbstraction abs(x);
  if (abs.variable_count() > kPropTautMaxVariables)
    throw Error(ErrorKind::PropTautTooLarge, std::to_string(abs.variable_count()) + " propositional variables (limit " +
                                                 std::to_string(kPropTautMaxVariables) + ")");
  const std::uint32_t rows = std::uint32_t{1} << abs.variable_count();
  for (std::uint32_t a = 0; a < rows; ++a)
    if (!abs.eval(x, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Line checking

/// Checks one line against the lines before it. `number` is the 1-based
/// position of the line.
inline void check_line(const Signature& sig, std::span<const DerivationLine> prefix, const DerivationLine& line,
                       std::size_t number) {
  using namespace detail;
  const auto& [sort, x] = line.statement;
  const auto& just = line.justification;
  auto fail = [&](ErrorKind kind, const std::string& why) -> void { throw CheckError(kind, number, why, line.span); };
  auto mismatch = [&](const std::string& why) { fail(ErrorKind::RuleMismatch, std::string(to_string(just.rule)) + ": " + why); };

  if (just.premises.size() != premise_count(just.rule))
    mismatch("expects " + std::to_string(premise_count(just.rule)) + " premise(s)");
  std::vector<const Statement*> premises;
  for (auto i : just.premises) {
    if (i == 0 || i > prefix.size()) mismatch("premise " + std::to_string(i) + " does not precede this line");
    premises.push_back(&prefix[i - 1].statement);
  }
  auto premise_sort = [&](std::size_t k, bool world) {
    const Sort& s = premises[k]->sort;
    if (s.is_world() != world)
      fail(ErrorKind::SortError, std::string(to_string(just.rule)) + ": premise " + std::to_string(just.premises[k]) +
                                     " must be " + (world ? "world-sorted" : "agent-sorted") + ", found " + s.to_string());
  };
  auto own_sort = [&](bool world) {
    if (sort.is_world() != world)
      fail(ErrorKind::SortError, std::string(to_string(just.rule)) + ": conclusion must be " +
                                     (world ? "world-sorted" : "agent-sorted") + ", found " + sort.to_string());
  };
  auto expect = [&](const Formula& expected) {
    if (!(x == expected)) mismatch("expected " + show(expected) + ", found " + show(x));
  };
  auto implication_of = [&](const Formula& y, const std::string& what) {
    auto imp = as_implication(y);
    if (!imp) mismatch(what + " is not an implication");
    return *imp;
  };
  auto modal_of = [&](const Formula& y, Kind kind, const std::string& what) {
    auto m = as_modal(y, kind);
    static const std::map<Kind, std::string> names{
        {Kind::Diamond, "<>"}, {Kind::Box, "[]"}, {Kind::SomeView, "E"}, {Kind::AllViews, "A"}};
    if (!m) mismatch(what + " is not of the form " + names.at(kind) + "...");
    return *m;
  };

  switch (just.rule) {
    case Rule::PropTaut:
      try {
        if (!is_prop_tautology(x)) fail(ErrorKind::NotATautology, "not a propositional tautology: " + show(x));
      } catch (const CheckError&) {
        throw;
      } catch (const Error& e) {
        fail(e.kind(), e.what());
      }
      return;

    case Rule::MP: {
      const Statement& minor = *premises[0];
      const Statement& major = *premises[1];
      if (!(minor.sort.agent == sort.agent) || !(major.sort.agent == sort.agent))
        fail(ErrorKind::SortError, "MP: premises and conclusion must share a sort");
      auto [antecedent, consequent] = implication_of(major.formula, "premise " + std::to_string(just.premises[1]));
      if (!(antecedent == minor.formula))
        mismatch("antecedent of premise " + std::to_string(just.premises[1]) + " differs from premise " +
                 std::to_string(just.premises[0]));
      expect(consequent);
      return;
    }

    case Rule::NecA:
      premise_sort(0, true);
      own_sort(false);
      expect(apply(Kind::Box, *sort.agent, premises[0]->formula));
      return;

    case Rule::NecE:
      premise_sort(0, false);
      own_sort(true);
      expect(apply(Kind::AllViews, *premises[0]->sort.agent, premises[0]->formula));
      return;

    case Rule::RM: {
      premise_sort(0, true);
      own_sort(false);
      if (just.modality != Kind::Diamond && just.modality != Kind::Box) mismatch("modality must be <> or []");
      auto [from, to] = implication_of(premises[0]->formula, "the premise");
      expect(implication(apply(*just.modality, *sort.agent, from), apply(*just.modality, *sort.agent, to)));
      return;
    }

    case Rule::RMPrime: {
      premise_sort(0, false);
      own_sort(true);
      if (just.modality != Kind::SomeView && just.modality != Kind::AllViews) mismatch("modality must be E or A");
      const std::string& a = *premises[0]->sort.agent;
      auto [from, to] = implication_of(premises[0]->formula, "the premise");
      expect(implication(apply(*just.modality, a, from), apply(*just.modality, a, to)));
      return;
    }

    case Rule::Adj1Down: {
      // e: Φ -> A[a] ψ   ==>   a: <>Φ -> ψ
      premise_sort(0, true);
      own_sort(false);
      auto [phi, rhs] = implication_of(premises[0]->formula, "the premise");
      auto [a, psi] = modal_of(rhs, Kind::AllViews, "the premise's consequent");
      if (a != *sort.agent) mismatch("agent " + a + " of A[...] differs from the conclusion sort " + *sort.agent);
      expect(implication(f::diamond(a, phi), psi));
      return;
    }

    case Rule::Adj1Up: {
      // a: <>Φ -> ψ   ==>   e: Φ -> A[a] ψ
      premise_sort(0, false);
      own_sort(true);
      const std::string& a = *premises[0]->sort.agent;
      auto [lhs, psi] = implication_of(premises[0]->formula, "the premise");
      auto [b, phi] = modal_of(lhs, Kind::Diamond, "the premise's antecedent");
      (void)b;
      expect(implication(phi, apply(Kind::AllViews, a, psi)));
      return;
    }

    case Rule::Adj2Down: {
      // a: φ -> []Ψ   ==>   e: E[a] φ -> Ψ
      premise_sort(0, false);
      own_sort(true);
      const std::string& a = *premises[0]->sort.agent;
      auto [phi, rhs] = implication_of(premises[0]->formula, "the premise");
      auto [b, psi] = modal_of(rhs, Kind::Box, "the premise's consequent");
      (void)b;
      expect(implication(f::exists(a, phi), psi));
      return;
    }

    case Rule::Adj2Up: {
      // e: E[a] φ -> Ψ   ==>   a: φ -> []Ψ
      premise_sort(0, true);
      own_sort(false);
      auto [lhs, psi] = implication_of(premises[0]->formula, "the premise");
      auto [a, phi] = modal_of(lhs, Kind::SomeView, "the premise's antecedent");
      if (a != *sort.agent) mismatch("agent " + a + " of E[...] differs from the conclusion sort " + *sort.agent);
      expect(implication(phi, apply(Kind::Box, a, psi)));
      return;
    }

    case Rule::AxSurjectivity: {
      // a: φ -> <> E[a] φ
      own_sort(false);
      auto [phi, rhs] = implication_of(x, "the statement");
      expect(implication(phi, f::diamond(*sort.agent, f::exists(*sort.agent, phi))));
      return;
    }

    case Rule::AxFunctionality: {
      // a: <> E[a] φ -> φ
      own_sort(false);
      auto [lhs, phi] = implication_of(x, "the statement");
      expect(implication(f::diamond(*sort.agent, f::exists(*sort.agent, phi)), phi));
      return;
    }

    case Rule::AxNonEmptiness: {
      own_sort(true);
      std::vector<Formula> alive;
      for (const auto& a : sig.agents()) alive.push_back(f::alive(a));
      expect(desugar(f::big_or(alive)));
      return;
    }
  }
}

/// Checks every line in order; throws CheckError at the first bad line.
inline void check_derivation(const Derivation& d) {
  const std::span<const DerivationLine> all(d.lines);
  for (std::size_t k = 0; k < d.lines.size(); ++k) check_line(d.sig, all.first(k), d.lines[k], k + 1);
}

// ---------------------------------------------------------------------------
// Soundness spot-check

struct SpotcheckFailure {
  std::size_t line = 0;  // 1-based
  Countermodel countermodel;
};

/// Every statement is checked for validity in every hypergraph within
/// bounds, with its atoms ranging over all assignments.
inline std::optional<SpotcheckFailure> soundness_spotcheck(const Derivation& d, const Bounds& b) {
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const auto& st = d.lines[k].statement;
    const Scheme s = make_scheme(st.formula, st.sort, restrict_to_used(d.sig, st.formula, st.sort));
    Verdict v = check_scheme(s, b);
    if (!v.valid()) return SpotcheckFailure{k + 1, std::move(*v.countermodel)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derivation files
//
//   agents: a, b
//   atoms[a]: p_a
//   atoms[env]: p
//   1. e: E[a] p_a -> E[a] p_a ; PropTaut
//   2. a: p_a -> [] E[a] p_a ; Adj2Up 1
//
// The sort token "e" names the world sort, so no agent may be called e.

namespace detail {

struct FileLine {
  std::string_view text;
  std::size_t offset = 0;
  std::size_t number = 0;  // 1-based line in the file
};

inline std::vector<FileLine> split_lines(std::string_view text) {
  std::vector<FileLine> out;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto stop = end == std::string_view::npos ? text.size() : end;
    out.push_back({text.substr(start, stop - start), start, number++});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

inline SourceSpan span_of(const FileLine& l, std::size_t from, std::size_t to) {
  return {l.offset + from, l.offset + to, l.number, from + 1};
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_names(std::string_view list) {
  std::vector<std::string> out;
  list = trim(list);
  if (list.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = list.find(',', start);
    out.emplace_back(trim(list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Derivation parse_derivation(std::string_view text) {
  using detail::span_of;
  using detail::trim;
  std::optional<std::vector<std::string>> agents;
  std::map<std::string, std::vector<std::string>> agent_atoms;
  std::vector<std::string> env_atoms;
  std::optional<Signature> sig;
  Derivation d{Signature({}, {}, {}), {}};

  for (const auto& l : detail::split_lines(text)) {
    std::string_view body = l.text;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (trim(body).empty()) continue;
    const std::size_t lead = body.find_first_not_of(" \t\r");
    auto whole = [&] { return span_of(l, lead, body.size()); };

    if (!std::isdigit(static_cast<unsigned char>(body[lead]))) {
      if (sig) throw ParseError(ErrorKind::Syntax, "declarations must precede derivation lines", whole());
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) throw ParseError(ErrorKind::Syntax, "expected a declaration", whole());
      const std::string key(trim(body.substr(0, colon)));
      auto names = detail::split_names(body.substr(colon + 1));
      for (const auto& n : names)
        if (!is_token(n)) throw ParseError(ErrorKind::Syntax, "invalid name '" + n + "'", whole());
      if (key == "agents") {
        if (agents) throw ParseError(ErrorKind::Syntax, "agents declared twice", whole());
        for (const auto& n : names)
          if (n == "e") throw ParseError(ErrorKind::Syntax, "agent name 'e' is reserved for the world sort", whole());
        agents = std::move(names);
      } else if (key == "atoms[env]") {
        env_atoms = std::move(names);
      } else if (key.size() > 7 && key.rfind("atoms[", 0) == 0 && key.back() == ']') {
        agent_atoms[key.substr(6, key.size() - 7)] = std::move(names);
      } else {
        throw ParseError(ErrorKind::Syntax, "unknown declaration '" + key + "'", whole());
      }
      continue;
    }

    if (!sig) {
      if (!agents) throw ParseError(ErrorKind::Syntax, "missing 'agents:' declaration", whole());
      std::vector<std::vector<std::string>> per_agent(agents->size());
      for (const auto& [agent, atoms] : agent_atoms) {
        auto it = std::find(agents->begin(), agents->end(), agent);
        if (it == agents->end()) throw ParseError(ErrorKind::UnknownAgent, "atoms declared for unknown agent " + agent, whole());
        per_agent[static_cast<std::size_t>(it - agents->begin())] = atoms;
      }
      try {
        sig = Signature(*agents, std::move(per_agent), env_atoms);
      } catch (const Error& e) {
        throw ParseError(e.kind(), e.what(), whole());
      }
      d.sig = *sig;
    }

    // k. <sort>: <formula> ; <Rule> <args>
    std::size_t pos = lead;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    const std::size_t k = std::stoul(std::string(body.substr(lead, pos - lead)));
    if (pos >= body.size() || body[pos] != '.') throw ParseError(ErrorKind::Syntax, "expected '.' after the line number", span_of(l, pos, pos));
    if (k != d.lines.size() + 1)
      throw ParseError(ErrorKind::Syntax, "expected line number " + std::to_string(d.lines.size() + 1), span_of(l, lead, pos));
    const auto colon = body.find(':', pos);
    const auto semi = body.find(';', pos);
    if (colon == std::string_view::npos || semi == std::string_view::npos || semi < colon)
      throw ParseError(ErrorKind::Syntax, "expected '<sort>: <formula> ; <rule>'", whole());
    const std::string sort_name(trim(body.substr(pos + 1, colon - pos - 1)));
    Sort sort = Sort::world();
    if (sort_name != "e") {
      if (!sig->find_agent(sort_name))
        throw ParseError(ErrorKind::UnknownAgent, "unknown sort '" + sort_name + "'", span_of(l, pos + 1, colon));
      sort = Sort::of(sort_name);
    }

    const std::string_view formula_text = body.substr(colon + 1, semi - colon - 1);
    Formula x;
    try {
      x = parse_formula(formula_text, sort, *sig);
    } catch (const Error& e) {
      std::optional<SourceSpan> span;
      if (e.span()) span = span_of(l, colon + 1 + e.span()->start, colon + 1 + e.span()->end);
      if (e.kind() == ErrorKind::Lexical || e.kind() == ErrorKind::Syntax) throw ParseError(e.kind(), e.what(), span);
      throw SortError(e.kind(), e.what(), span);
    }

    std::vector<std::string> words;
    {
      std::string_view rest = body.substr(semi + 1);
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        std::size_t j = i;
        while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
        if (j > i) words.emplace_back(rest.substr(i, j - i));
        i = j;
      }
    }
    const SourceSpan rule_span = span_of(l, semi + 1, body.size());
    if (words.empty()) throw ParseError(ErrorKind::Syntax, "missing rule name", rule_span);
    Justification just;
    bool known = false;
    for (const auto& [rule, name] : rule_names())
      if (name == words[0]) {
        just.rule = rule;
        known = true;
      }
    if (!known) throw ParseError(ErrorKind::Syntax, "unknown rule '" + words[0] + "'", rule_span);
    std::size_t arg = 1;
    for (std::size_t i = 0; i < premise_count(just.rule); ++i, ++arg) {
      if (arg >= words.size() || words[arg].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(ErrorKind::Syntax, words[0] + " expects premise line numbers", rule_span);
      just.premises.push_back(std::stoul(words[arg]));
    }
    if (just.rule == Rule::RM || just.rule == Rule::RMPrime) {
      static const std::map<std::string, Kind> modalities{
          {"<>", Kind::Diamond}, {"[]", Kind::Box}, {"E", Kind::SomeView}, {"A", Kind::AllViews}};
      if (arg >= words.size() || !modalities.count(words[arg]))
        throw ParseError(ErrorKind::Syntax, words[0] + " expects a modality (<>, [], E or A)", rule_span);
      just.modality = modalities.at(words[arg++]);
    }
    if (arg != words.size()) throw ParseError(ErrorKind::Syntax, "unexpected text after the justification", rule_span);
    d.lines.push_back({Statement{sort, std::move(x)}, std::move(just), whole()});
  }
  if (!sig) {
    if (!agents) throw ParseError(ErrorKind::Syntax, "missing 'agents:' declaration");
    std::vector<std::vector<std::string>> per_agent(agents->size());
    d.sig = Signature(*agents, std::move(per_agent), env_atoms);
  }
  return d;
}

inline std::string render_derivation(const Derivation& d) {
  std::string out = "agents: " + detail::join_names(d.sig.agents()) + "\n";
  for (std::size_t a = 0; a < d.sig.agent_count(); ++a)
    if (!d.sig.agent_atoms(AgentId(a)).empty())
      out += "atoms[" + d.sig.agent_name(AgentId(a)) + "]: " + detail::join_names(d.sig.agent_atoms(AgentId(a))) + "\n";
  if (!d.sig.env_atoms().empty()) out += "atoms[env]: " + detail::join_names(d.sig.env_atoms()) + "\n";
  for (std::size_t k = 0; k < d.lines.size(); ++k) {
    const auto& [st, just, span] = d.lines[k];
    out += std::to_string(k + 1) + ". " + (st.sort.is_world() ? "e" : *st.sort.agent) + ": " + render(st.formula) + " ; " +
           std::string(to_string(just.rule));
    for (auto p : just.premises) out += " " + std::to_string(p);
    if (just.modality) {
      switch (*just.modality) {
        case Kind::Diamond: out += " <>"; break;
        case Kind::Box: out += " []"; break;
        case Kind::SomeView: out += " E"; break;
        default: out += " A"; break;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace hyperknow

#endif  // HYPERKNOW_PROOF_HPP
