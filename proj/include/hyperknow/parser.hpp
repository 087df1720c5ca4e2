#ifndef HYPERKNOW_PARSER_HPP
#define HYPERKNOW_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknow/core.hpp"
#include "hyperknow/errors.hpp"
#include "hyperknow/formula.hpp"

namespace hyperknow {

// ---------------------------------------------------------------------------
// Formula grammar
//
//   impl  := or ('->' impl)?
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := ('~' | '<>' | '[]' | 'E[' a ']' | 'A[' a ']' | 'K[' a ']' | 'Ksafe[' a ']') unary
//          | 'true' | 'false' | 'alive(' a ')' | atom | '(' impl ')'
//
// `<>` and `[]` belong to the agent whose formula is being parsed.

namespace detail {

enum class Tok { End, Ident, Not, And, Or, Implies, LParen, RParen, Diamond, Box, Exists, Forall, Knows, Ksafe, Alive };

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Diamond: return "'<>'";
    case Tok::Box: return "'[]'";
    case Tok::Exists: return "'E[..]'";
    case Tok::Forall: return "'A[..]'";
    case Tok::Knows: return "'K[..]'";
    case Tok::Ksafe: return "'Ksafe[..]'";
    case Tok::Alive: return "'alive(..)'";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;  // identifier, or the agent of a modal prefix
  SourceSpan span;
};

/// Byte position with line/column bookkeeping.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  std::size_t offset() const { return pos_; }
  std::string_view text() const { return text_; }

  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan mark() const { return {pos_, pos_, line_, col_}; }
  SourceSpan from(const SourceSpan& start) const { return {start.start, pos_, start.line, start.column}; }

  /// Skips spaces, tabs, carriage returns and '#' comments; stops at newlines.
  void skip_blanks() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool at_eol() {
    skip_blanks();
    return at_end() || peek() == '\n';
  }

  bool accept(char c) {
    skip_blanks();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  /// Reads a name; `dotted` also admits '.'.
  std::string name(bool dotted, const char* what) {
    skip_blanks();
    const std::size_t start = pos_;
    while (!at_end() && (is_token_char(peek()) || (dotted && peek() == '.'))) advance();
    if (pos_ == start) fail(std::string("expected ") + what + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    if (peek() == '\n') return ", found end of line";
    return std::string(", found '") + peek() + "'";
  }

  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::Syntax) const {
    SourceSpan s = mark();
    if (!at_end()) s.end = s.start + 1;
    throw ParseError(kind, msg, s);
  }

  void skip_line() {
    while (!at_end() && peek() != '\n') advance();
    advance();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline std::vector<Token> tokenize(std::string_view text) {
  TextCursor cur(text);
  std::vector<Token> out;
  auto lex_fail = [&](const SourceSpan& at, const std::string& msg) -> void {
    SourceSpan s = at;
    if (s.end == s.start && s.start < text.size()) s.end = s.start + 1;
    throw ParseError(ErrorKind::Lexical, msg, s);
  };
  // Reads "[agent]" or "(agent)" right after a keyword.
  auto bracketed = [&](char open, char close) -> std::string {
    const auto at = cur.mark();
    if (cur.peek() != open) lex_fail(at, std::string("expected '") + open + "'");
    cur.advance();
    while (cur.peek() == ' ' || cur.peek() == '\t') cur.advance();
    const std::size_t start = cur.offset();
    while (is_token_char(cur.peek())) cur.advance();
    std::string agent(text.substr(start, cur.offset() - start));
    while (cur.peek() == ' ' || cur.peek() == '\t') cur.advance();
    if (agent.empty()) lex_fail(cur.mark(), "expected an agent name");
    if (cur.peek() != close) lex_fail(cur.mark(), std::string("expected '") + close + "'");
    cur.advance();
    return agent;
  };

  while (true) {
    while (!cur.at_end() && (cur.peek() == ' ' || cur.peek() == '\t' || cur.peek() == '\r' || cur.peek() == '\n'))
      cur.advance();
    const SourceSpan start = cur.mark();
    if (cur.at_end()) {
      out.push_back({Tok::End, {}, start});
      return out;
    }
    const char c = cur.peek();
    auto single = [&](Tok t, std::size_t len) {
      for (std::size_t i = 0; i < len; ++i) cur.advance();
      out.push_back({t, {}, cur.from(start)});
    };
    if (c == '~') { single(Tok::Not, 1); continue; }
    if (c == '&') { single(Tok::And, 1); continue; }
    if (c == '|') { single(Tok::Or, 1); continue; }
    if (c == '(') { single(Tok::LParen, 1); continue; }
    if (c == ')') { single(Tok::RParen, 1); continue; }
    if (c == '-' && cur.peek(1) == '>') { single(Tok::Implies, 2); continue; }
    if (c == '<' && cur.peek(1) == '>') { single(Tok::Diamond, 2); continue; }
    if (c == '[' && cur.peek(1) == ']') { single(Tok::Box, 2); continue; }
    if (is_token_char(c)) {
      const std::size_t begin = cur.offset();
      while (is_token_char(cur.peek())) cur.advance();
      const std::string word(text.substr(begin, cur.offset() - begin));
      std::optional<Tok> prefix;
      if (cur.peek() == '[') {
        if (word == "E") prefix = Tok::Exists;
        else if (word == "A") prefix = Tok::Forall;
        else if (word == "K") prefix = Tok::Knows;
        else if (word == "Ksafe") prefix = Tok::Ksafe;
      }
      if (prefix) {
        std::string agent = bracketed('[', ']');
        out.push_back({*prefix, std::move(agent), cur.from(start)});
      } else if (word == "alive" && cur.peek() == '(') {
        std::string agent = bracketed('(', ')');
        out.push_back({Tok::Alive, std::move(agent), cur.from(start)});
      } else {
        out.push_back({Tok::Ident, word, cur.from(start)});
      }
      continue;
    }
    lex_fail(start, std::string("unexpected character '") + c + "'");
  }
}

inline SourceSpan join(const SourceSpan& a, const SourceSpan& b) { return {a.start, b.end, a.line, a.column}; }

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : toks_(tokenize(text)) {}

  Formula parse(const Sort& sort) {
    Formula x = implication(sort);
    expect_end();
    return x;
  }

  Kb4Formula parse_kb4() {
    Kb4Formula x = kb4_implication();
    expect_end();
    return x;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    next();
    return true;
  }

  [[noreturn]] void unexpected(const std::string& wanted) const {
    const Token& t = peek();
    std::string what = t.kind == Tok::Ident ? "'" + t.text + "'" : describe(t.kind);
    throw ParseError(ErrorKind::Syntax, "expected " + wanted + ", found " + what, t.span);
  }

  void expect_end() const {
    if (peek().kind != Tok::End) unexpected("an operator or end of input");
  }

  Formula implication(const Sort& s) {
    Formula lhs = disjunction(s);
    if (!accept(Tok::Implies)) return lhs;
    Formula rhs = implication(s);
    return Formula::make(Kind::Implies, {}, lhs, rhs, join(lhs.span(), rhs.span()));
  }

  Formula disjunction(const Sort& s) {
    Formula acc = conjunction(s);
    while (accept(Tok::Or)) {
      Formula rhs = conjunction(s);
      acc = Formula::make(Kind::Or, {}, acc, rhs, join(acc.span(), rhs.span()));
    }
    return acc;
  }

  Formula conjunction(const Sort& s) {
    Formula acc = unary(s);
    while (accept(Tok::And)) {
      Formula rhs = unary(s);
      acc = Formula::make(Kind::And, {}, acc, rhs, join(acc.span(), rhs.span()));
    }
    return acc;
  }

  static void require_world(const Sort& s, const Token& t) {
    if (!s.is_world())
      throw SortError(ErrorKind::SortError, std::string(describe(t.kind)) + " builds a world formula but occurs in a formula of " +
                                                s.to_string(), t.span);
  }

  Formula unary(const Sort& s) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Not: {
        next();
        Formula x = unary(s);
        return Formula::make(Kind::Not, {}, x, {}, join(t.span, x.span()));
      }
      case Tok::Diamond:
      case Tok::Box: {
        if (s.is_world())
          throw SortError(ErrorKind::SortError,
                          std::string(describe(t.kind)) + " is an agent modality but occurs in a world formula", t.span);
        next();
        Formula x = unary(Sort::world());
        return Formula::make(t.kind == Tok::Diamond ? Kind::Diamond : Kind::Box, *s.agent, x, {}, join(t.span, x.span()));
      }
      case Tok::Exists:
      case Tok::Forall: {
        require_world(s, t);
        next();
        Formula x = unary(Sort::of(t.text));
        return Formula::make(t.kind == Tok::Exists ? Kind::SomeView : Kind::AllViews, t.text, x, {}, join(t.span, x.span()));
      }
      case Tok::Knows:
      case Tok::Ksafe: {
        require_world(s, t);
        next();
        Formula x = unary(Sort::world());
        return Formula::make(t.kind == Tok::Knows ? Kind::Kunsafe : Kind::Ksafe, t.text, x, {}, join(t.span, x.span()));
      }
      case Tok::Alive:
        require_world(s, t);
        next();
        return Formula::make(Kind::Alive, t.text, {}, {}, t.span);
      case Tok::Ident:
        next();
        if (t.text == "true") return Formula::make(Kind::True, {}, {}, {}, t.span);
        if (t.text == "false") return Formula::make(Kind::False, {}, {}, {}, t.span);
        return Formula::make(Kind::Atom, t.text, {}, {}, t.span);
      case Tok::LParen: {
        next();
        Formula x = implication(s);
        if (!accept(Tok::RParen)) unexpected("')'");
        return x;
      }
      default:
        unexpected("a formula");
    }
  }

  Kb4Formula kb4_implication() {
    Kb4Formula lhs = kb4_disjunction();
    if (!accept(Tok::Implies)) return lhs;
    Kb4Formula rhs = kb4_implication();
    const auto span = join(lhs.span(), rhs.span());
    return Kb4Formula::make(
        Kb4Kind::Not, {},
        Kb4Formula::make(Kb4Kind::And, {}, lhs, Kb4Formula::make(Kb4Kind::Not, {}, rhs, {}, rhs.span()), span), {}, span);
  }

  Kb4Formula kb4_disjunction() {
    Kb4Formula acc = kb4_conjunction();
    while (accept(Tok::Or)) {
      Kb4Formula rhs = kb4_conjunction();
      const auto span = join(acc.span(), rhs.span());
      acc = Kb4Formula::make(Kb4Kind::Not, {},
                             Kb4Formula::make(Kb4Kind::And, {}, Kb4Formula::make(Kb4Kind::Not, {}, acc, {}, acc.span()),
                                              Kb4Formula::make(Kb4Kind::Not, {}, rhs, {}, rhs.span()), span),
                             {}, span);
    }
    return acc;
  }

  Kb4Formula kb4_conjunction() {
    Kb4Formula acc = kb4_unary();
    while (accept(Tok::And)) {
      Kb4Formula rhs = kb4_unary();
      acc = Kb4Formula::make(Kb4Kind::And, {}, acc, rhs, join(acc.span(), rhs.span()));
    }
    return acc;
  }

  Kb4Formula kb4_unary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Not: {
        next();
        Kb4Formula x = kb4_unary();
        return Kb4Formula::make(Kb4Kind::Not, {}, x, {}, join(t.span, x.span()));
      }
      case Tok::Knows: {
        next();
        Kb4Formula x = kb4_unary();
        return Kb4Formula::make(Kb4Kind::Knows, t.text, x, {}, join(t.span, x.span()));
      }
      case Tok::Ident:
        next();
        if (t.text == "true") return Kb4Formula::make(Kb4Kind::True, {}, {}, {}, t.span);
        if (t.text == "false") return Kb4Formula::make(Kb4Kind::False, {}, {}, {}, t.span);
        return Kb4Formula::make(Kb4Kind::Atom, t.text, {}, {}, t.span);
      case Tok::LParen: {
        next();
        Kb4Formula x = kb4_implication();
        if (!accept(Tok::RParen)) unexpected("')'");
        return x;
      }
      default:
        unexpected("a KB4 formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a formula of the given sort, sort-checks it against `sig` and
/// returns its core (desugared) form with spans and resolution data.
inline Formula parse_formula(std::string_view text, const Sort& sort, const Signature& sig) {
  detail::FormulaParser p(text);
  Formula raw = p.parse(sort);
  return desugar(sort_check(raw, sort, sig));
}

inline Formula parse_world(std::string_view text, const Signature& sig) { return parse_formula(text, Sort::world(), sig); }

inline Formula parse_agent(std::string_view text, std::string_view agent, const Signature& sig) {
  return parse_formula(text, Sort::of(std::string(agent)), sig);
}

/// Parses without sort checking or desugaring; `<>`/`[]` still take their
/// agent from the surrounding sort.
inline Formula parse_unchecked(std::string_view text, const Sort& sort) {
  detail::FormulaParser p(text);
  return p.parse(sort);
}

inline Kb4Formula parse_kb4(std::string_view text, const Signature& sig) {
  detail::FormulaParser p(text);
  Kb4Formula x = p.parse_kb4();
  sort_check(x, sig);
  return x;
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

enum Prec : int { PrecImplies = 1, PrecOr = 2, PrecAnd = 3, PrecPrefix = 4 };

struct Rendered {
  std::string text;
  int prec;
};

inline std::string wrap(const Rendered& r, int min_prec) { return r.prec < min_prec ? "(" + r.text + ")" : r.text; }

inline Rendered render_node(const Formula& x);

inline Rendered prefix(const std::string& op, const Formula& operand) {
  return {op + wrap(render_node(operand), PrecPrefix), PrecPrefix};
}
inline Rendered binary(const Formula& l, const char* op, const Formula& r, int prec) {
  // & and | associate to the left, -> to the right.
  const bool right_assoc = prec == PrecImplies;
  return {wrap(render_node(l), right_assoc ? prec + 1 : prec) + op + wrap(render_node(r), right_assoc ? prec : prec + 1),
          prec};
}

inline bool is(const Formula& x, Kind k) { return x && x.kind() == k; }

// [] X on the core: ~<>~X. Returns X.
inline std::optional<Formula> match_box(const Formula& x) {
  if (is(x, Kind::Not) && is(x.operand(), Kind::Diamond) && is(x.operand().operand(), Kind::Not))
    return x.operand().operand().operand();
  return std::nullopt;
}

inline Rendered render_not(const Formula& x) {
  const Formula y = x.operand();
  if (is(y, Kind::SomeView) && is(y.operand(), Kind::Not)) {
    const Formula body = y.operand().operand();
    if (auto inner = match_box(body); inner && body.operand().name() == y.name())
      return prefix("K[" + y.name() + "] ", *inner);
    return prefix("A[" + y.name() + "] ", body);
  }
  if (is(y, Kind::And)) {
    // ~(~X & ~Y) reads as X | Y, unless ~X is itself a -> or | on the core.
    const Formula l = y.lhs();
    const bool lhs_is_binary = is(l, Kind::Not) && is(l.operand(), Kind::And) && is(l.operand().rhs(), Kind::Not);
    if (is(l, Kind::Not) && is(y.rhs(), Kind::Not) && !lhs_is_binary)
      return binary(l.operand(), " | ", y.rhs().operand(), PrecOr);
    if (is(y.rhs(), Kind::Not)) return binary(y.lhs(), " -> ", y.rhs().operand(), PrecImplies);
  }
  if (auto inner = match_box(x)) return prefix("[] ", *inner);
  return prefix("~", y);
}

inline Rendered render_node(const Formula& x) {
  switch (x.kind()) {
    case Kind::True: return {"true", PrecPrefix};
    case Kind::False: return {"false", PrecPrefix};
    case Kind::Atom: return {x.name(), PrecPrefix};
    case Kind::Not: return render_not(x);
    case Kind::And: return binary(x.lhs(), " & ", x.rhs(), PrecAnd);
    case Kind::Or: return binary(x.lhs(), " | ", x.rhs(), PrecOr);
    case Kind::Implies: return binary(x.lhs(), " -> ", x.rhs(), PrecImplies);
    case Kind::Diamond: return prefix("<> ", x.operand());
    case Kind::Box: return prefix("[] ", x.operand());
    case Kind::SomeView: {
      const Formula y = x.operand();
      if (is(y, Kind::True)) return {"alive(" + x.name() + ")", PrecPrefix};
      if (auto inner = match_box(y); inner && y.operand().name() == x.name()) return prefix("Ksafe[" + x.name() + "] ", *inner);
      return prefix("E[" + x.name() + "] ", y);
    }
    case Kind::AllViews: return prefix("A[" + x.name() + "] ", x.operand());
    case Kind::Alive: return {"alive(" + x.name() + ")", PrecPrefix};
    case Kind::Ksafe: return prefix("Ksafe[" + x.name() + "] ", x.operand());
    case Kind::Kunsafe: return prefix("K[" + x.name() + "] ", x.operand());
  }
  return {"?", PrecPrefix};
}

inline Rendered render_kb4_node(const Kb4Formula& x) {
  auto pre = [](const std::string& op, const Kb4Formula& y) {
    return Rendered{op + wrap(render_kb4_node(y), PrecPrefix), PrecPrefix};
  };
  auto bin = [](const Kb4Formula& l, const char* op, const Kb4Formula& r, int prec) {
    const bool right_assoc = prec == PrecImplies;
    return Rendered{wrap(render_kb4_node(l), right_assoc ? prec + 1 : prec) + op +
                        wrap(render_kb4_node(r), right_assoc ? prec : prec + 1),
                    prec};
  };
  switch (x.kind()) {
    case Kb4Kind::True: return {"true", PrecPrefix};
    case Kb4Kind::False: return {"false", PrecPrefix};
    case Kb4Kind::Atom: return {x.name(), PrecPrefix};
    case Kb4Kind::And: return bin(x.lhs(), " & ", x.rhs(), PrecAnd);
    case Kb4Kind::Knows: return pre("K[" + x.name() + "] ", x.operand());
    case Kb4Kind::Not: {
      const Kb4Formula y = x.operand();
      if (y.kind() == Kb4Kind::And) {
        if (y.lhs().kind() == Kb4Kind::Not && y.rhs().kind() == Kb4Kind::Not)
          return bin(y.lhs().operand(), " | ", y.rhs().operand(), PrecOr);
        if (y.rhs().kind() == Kb4Kind::Not) return bin(y.lhs(), " -> ", y.rhs().operand(), PrecImplies);
      }
      return pre("~", y);
    }
  }
  return {"?", PrecPrefix};
}

}  // namespace detail

/// Canonical text. Derived forms are recovered greedily from the core, so
/// parsing the result gives back the desugared input.
inline std::string render(const Formula& x) { return detail::render_node(x).text; }

inline std::string render(const Kb4Formula& x) { return detail::render_kb4_node(x).text; }

// ---------------------------------------------------------------------------
// Model files

/// Decodes the model text format without validating it.
inline RawModel parse_raw_model(std::string_view text) {
  detail::TextCursor cur(text);
  std::optional<std::vector<std::string>> agents;
  std::vector<std::pair<std::string, std::vector<std::string>>> agent_atoms;
  std::vector<std::pair<std::string, SourceSpan>> atom_owner;
  std::optional<std::vector<std::string>> env_atoms;
  RawModel raw;
  std::optional<SourceSpan> agents_span;

  auto name_list = [&](char close) {
    std::vector<std::string> out;
    if (close ? cur.accept(close) : cur.at_eol()) return out;
    do out.push_back(cur.name(false, "a name"));
    while (cur.accept(','));
    if (close) cur.expect(close);
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
      agents = name_list('\0');
      agents_span = cur.from(start);
    } else if (keyword == "atoms") {
      cur.expect('[');
      const SourceSpan owner_span = cur.mark();
      const std::string owner = cur.name(false, "an agent name or 'env'");
      cur.expect(']');
      cur.expect(':');
      auto list = name_list('\0');
      if (owner == "env") {
        if (env_atoms) cur.fail("atoms[env] declared twice");
        env_atoms = std::move(list);
      } else {
        for (const auto& [name, _] : agent_atoms)
          if (name == owner) cur.fail("atoms[" + owner + "] declared twice");
        agent_atoms.emplace_back(owner, std::move(list));
        atom_owner.emplace_back(owner, cur.from(owner_span));
      }
    } else if (keyword == "mode") {
      cur.expect(':');
      const std::string mode = cur.name(false, "'generalized' or 'functional'");
      if (mode == "generalized")
        raw.generalized = true;
      else if (mode != "functional")
        cur.fail("unknown mode '" + mode + "'");
    } else if (keyword == "view") {
      RawView v;
      v.agent = cur.name(false, "an agent name");
      cur.expect(':');
      v.name = cur.name(true, "a view name");
      if (cur.accept('{')) v.atoms = name_list('}');
      v.span = cur.from(start);
      raw.views.push_back(std::move(v));
    } else if (keyword == "edge") {
      RawEdge e;
      e.name = cur.name(true, "an edge name");
      cur.expect('{');
      if (!cur.accept('}')) {
        do {
          cur.skip_blanks();
          const SourceSpan inc_start = cur.mark();
          RawIncidence inc;
          inc.agent = cur.name(false, "an agent name");
          cur.expect(':');
          inc.view = cur.name(true, "a view name");
          inc.span = cur.from(inc_start);
          e.members.push_back(std::move(inc));
        } while (cur.accept(','));
        cur.expect('}');
      }
      cur.skip_blanks();
      if (!cur.at_eol()) {
        const SourceSpan kw = cur.mark();
        if (cur.name(false, "'env'") != "env") throw ParseError(ErrorKind::Syntax, "expected 'env'", cur.from(kw));
        cur.expect('{');
        e.env_atoms = name_list('}');
      }
      e.span = cur.from(start);
      raw.edges.push_back(std::move(e));
    } else {
      throw ParseError(ErrorKind::Syntax, "unknown declaration '" + keyword + "'", cur.from(start));
    }
    if (!cur.at_eol()) cur.fail("expected end of line" + cur.found());
  }

  if (!agents) throw ParseError(ErrorKind::Syntax, "missing 'agents:' declaration", cur.mark());
  std::vector<std::vector<std::string>> atoms(agents->size());
  for (std::size_t i = 0; i < agent_atoms.size(); ++i) {
    auto it = std::find(agents->begin(), agents->end(), agent_atoms[i].first);
    if (it == agents->end())
      throw ParseError(ErrorKind::UnknownAgent, "atoms declared for unknown agent '" + agent_atoms[i].first + "'",
                       atom_owner[i].second);
    atoms[static_cast<std::size_t>(it - agents->begin())] = agent_atoms[i].second;
  }
  raw.sig = Signature(*agents, std::move(atoms), env_atoms.value_or(std::vector<std::string>{}));
  return raw;
}

inline Model parse_model(std::string_view text) { return build_model(parse_raw_model(text)); }

namespace detail {

inline std::string join_names(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace detail

inline std::string render_model(const RawModel& raw) {
  const auto& sig = raw.sig;
  std::string out = "agents: " + detail::join_names(sig.agents()) + "\n";
  for (std::size_t a = 0; a < sig.agent_count(); ++a)
    if (!sig.agent_atoms(AgentId(a)).empty())
      out += "atoms[" + sig.agent_name(AgentId(a)) + "]: " + detail::join_names(sig.agent_atoms(AgentId(a))) + "\n";
  if (!sig.env_atoms().empty()) out += "atoms[env]: " + detail::join_names(sig.env_atoms()) + "\n";
  if (raw.generalized) out += "mode: generalized\n";
  for (const auto& v : raw.views) {
    out += "view " + v.agent + ": " + v.name;
    if (!v.atoms.empty()) out += " { " + detail::join_names(v.atoms) + " }";
    out += "\n";
  }
  for (const auto& e : raw.edges) {
    out += "edge " + e.name + " {";
    for (std::size_t i = 0; i < e.members.size(); ++i)
      out += (i ? ", " : " ") + e.members[i].agent + ": " + e.members[i].view;
    out += e.members.empty() ? "}" : " }";
    if (!e.env_atoms.empty()) out += " env { " + detail::join_names(e.env_atoms) + " }";
    out += "\n";
  }
  return out;
}

inline std::string render_model(const Model& m) { return render_model(to_raw(m)); }

}  // namespace hyperknow

#endif  // HYPERKNOW_PARSER_HPP
