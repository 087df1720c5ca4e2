#ifndef HYPERKNOW_ERRORS_HPP
#define HYPERKNOW_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperknow {

/// Location of a piece of text inside an input buffer. Offsets are bytes,
/// line and column are 1-based.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorKind {
  Lexical,
  Syntax,
  UnknownAtom,
  UnknownAgent,
  WrongSortAtom,
  AgentMismatch,
  SortError,
  Validation,
  UnknownPoint,
  NonEmptyAgentAtoms,
  RuleMismatch,
  NotATautology,
  PropTautTooLarge,
  Bounds,
  Morphism,
  Usage,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Lexical: return "lexical error";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::UnknownAtom: return "unknown atom";
    case ErrorKind::UnknownAgent: return "unknown agent";
    case ErrorKind::WrongSortAtom: return "wrong sort atom";
    case ErrorKind::AgentMismatch: return "agent mismatch";
    case ErrorKind::SortError: return "sort error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::UnknownPoint: return "unknown point";
    case ErrorKind::NonEmptyAgentAtoms: return "non-empty agent atoms";
    case ErrorKind::RuleMismatch: return "rule mismatch";
    case ErrorKind::NotATautology: return "not a tautology";
    case ErrorKind::PropTautTooLarge: return "propositional abstraction too large";
    case ErrorKind::Bounds: return "bounds error";
    case ErrorKind::Morphism: return "morphism error";
    case ErrorKind::Usage: return "usage error";
  }
  return "error";
}

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(message), kind_(kind), span_(span) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  ErrorKind kind_;
  std::optional<SourceSpan> span_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SortError : public Error {
 public:
  using Error::Error;
};

/// One broken structural condition, e.g. invariant "surjectivity" with detail
/// "view vb of agent b belongs to no edge".
struct Violation {
  Violation(std::string invariant_, std::string detail_, std::optional<SourceSpan> span_ = std::nullopt)
      : invariant(std::move(invariant_)), detail(std::move(detail_)), span(span_) {}

  std::string invariant;
  std::string detail;
  std::optional<SourceSpan> span;

  std::string to_string() const { return invariant + ": " + detail; }
};

/// Carries every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : Error(ErrorKind::Validation, summarize(violations), first_span(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& vs) {
    std::string out = std::to_string(vs.size()) + " violation(s)";
    for (const auto& v : vs) out += "\n  " + v.to_string();
    return out;
  }
  static std::optional<SourceSpan> first_span(const std::vector<Violation>& vs) {
    for (const auto& v : vs)
      if (v.span) return v.span;
    return std::nullopt;
  }

  std::vector<Violation> violations_;
};

}  // namespace hyperknow

#endif  // HYPERKNOW_ERRORS_HPP
