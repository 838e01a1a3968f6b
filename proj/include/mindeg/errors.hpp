#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mindeg {

// Malformed graph/hypergraph text. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A domain precondition does not hold: unreachable degree threshold,
// non-regular target where a regular one is required, a copy that is not
// contained in its ambient graph, and so on.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Instance exceeds the hard size cap of an exact algorithm.
class SizeCapError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace mindeg
