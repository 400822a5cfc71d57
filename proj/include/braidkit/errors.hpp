#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of a binary braid operation live in different braid groups.
class StrandMismatch : public Error {
 public:
  StrandMismatch(int lhs, int rhs)
      : Error("strand-count mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

// A parameter lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configurable desk-scale cap (degree, strands, budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An exact division left a remainder. Where the algebra guarantees
// divisibility this indicates a bug, so it is never caught internally.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

}  // namespace braidkit
