#pragma once

#include <stdexcept>
#include <string>

namespace cactus {

// Base for every error raised by the library. Each failure mode has its own
// subtype so callers (and the CLI exit-code mapping) can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Shape mismatch or other misuse of a matrix operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

enum class ParseErrorKind {
  MalformedHeader,
  TruncatedBits,
  BadCharacter,
  TrailingData,
  SelfLoop,
  DuplicateEdge,
  NegativeIndex,
  IndexOutOfRange,
  BadSyntax,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Raised by Graph construction for loops, repeated edges, or bad endpoints.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class NotCactus : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

class NotCutVertex : public Error {
 public:
  using Error::Error;
};

class InconsistentPartition : public Error {
 public:
  using Error::Error;
};

// sigma-transform preconditions.
class MissingPendants : public Error {
 public:
  using Error::Error;
};

class AmbiguousNeighbor : public Error {
 public:
  using Error::Error;
};

// find_end_cycles called outside Cact(n,t) with t >= 2.
class DefinitionDomain : public Error {
 public:
  using Error::Error;
};

// Cycle-shortening transform preconditions.
class CycleTooShort : public Error {
 public:
  using Error::Error;
};

class NotEndCycle : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

}  // namespace cactus
