#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jgbtda {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or musically inconsistent score text. Positions are 1-based.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              (kind == Kind::Syntax ? "syntax error: " : "semantic error: ") + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Failure in a pipeline stage after parsing (network, homology, cycles, overlap, report).
class AnalysisError : public Error {
 public:
  AnalysisError(const std::string& stage, const std::string& what)
      : Error(stage + ": " + what), stage_(stage) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace jgbtda
