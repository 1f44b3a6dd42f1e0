#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid graph data: self-loops, duplicate edges, unknown labels.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition does not hold (disconnected input, non-chordal input, bad k, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds a configured solver/enumeration cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Class-F evidence is missing or the characterization verdict does not fit the request.
class EvidenceError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of a strategy failed. Indicates the instance violates the
/// hypotheses the strategy was certified under.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The defender cannot answer an attack in the current round.
class DefenseImpossible : public Error {
 public:
  DefenseImpossible(const std::string& what, std::size_t round)
      : Error("defense impossible at round " + std::to_string(round) + ": " + what), round_(round) {}

  std::size_t round() const noexcept { return round_; }

 private:
  std::size_t round_;
};

}  // namespace evc
