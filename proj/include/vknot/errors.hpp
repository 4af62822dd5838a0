#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

/// Root of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or knot text. `position` is a character offset for
/// polynomials and a 1-based line number for knot files.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A multi-term polynomial was substituted into a negative power.
class NegativePowerOfNonUnit : public Error {
 public:
  using Error::Error;
};

enum class ValidationKind {
  DegenerateCrossing,
  EdgeUsedTwiceAsInput,
  DuplicateEdge,
  EdgeUnused,
  NotSingleComponent,
};

inline const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::DegenerateCrossing: return "DegenerateCrossing";
    case ValidationKind::EdgeUsedTwiceAsInput: return "EdgeUsedTwiceAsInput";
    case ValidationKind::DuplicateEdge: return "DuplicateEdge";
    case ValidationKind::EdgeUnused: return "EdgeUnused";
    case ValidationKind::NotSingleComponent: return "NotSingleComponent";
  }
  return "?";
}

class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, const std::string& detail)
      : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  ValidationKind kind() const noexcept { return kind_; }

 private:
  ValidationKind kind_;
};

/// A Cheng coloring failed to close up around the knot.
class InconsistentColoring : public Error {
 public:
  using Error::Error;
};

class EmptyDiagram : public Error {
 public:
  using Error::Error;
};

/// A proven structural identity failed; always an implementation bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

class SameEdge : public Error {
 public:
  using Error::Error;
};

class NotAKink : public Error {
 public:
  using Error::Error;
};

class NotAnR2Pair : public Error {
 public:
  using Error::Error;
};

}  // namespace vknot
