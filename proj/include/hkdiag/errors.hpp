#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hk {

// Input text that does not follow the file grammar.
struct ParseError : std::runtime_error {
  std::size_t line, column;
  ParseError(std::size_t line, std::size_t column, const std::string &msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line(line), column(column) {}
};

// Well-parsed value violating a type invariant (dangling ids, disconnected graph).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition of a mathematical operation not met, or a rejected rewrite.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fact set asserting mutually exclusive things.
struct ContradictionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace hk
