#pragma once

#include <stdexcept>
#include <string>

namespace qfg {

// Malformed input: inconsistent quivers, inhomogeneous relations,
// non-composable paths, invariant violations.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter (bound, degree, index) outside the range an operation supports.
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The computation window was too small to decide the question asked.
class InconclusiveError : public std::runtime_error {
 public:
  InconclusiveError(const std::string& what, int suggestedBound = -1)
      : std::runtime_error(what), suggestedBound_(suggestedBound) {}
  int suggestedBound() const { return suggestedBound_; }

 private:
  int suggestedBound_;
};

// Parse failure with a character offset into the offending string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qfg
