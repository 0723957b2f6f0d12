#ifndef QALEX_ERRORS_HPP
#define QALEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qalex {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix shape mismatch (non-square determinant, incompatible product, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Inexact division in the Laurent ring.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// Series with zero constant term passed where a unit is required.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// Pivot 1 - M[k,k] of a Gaussian contraction is not a unit.
class SingularContractionError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's precondition (e.g. braid closure is a link).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction was found violated.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at token " + std::to_string(position) + ")"),
        position_(position) {}

  // Zero-based token index where parsing failed.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qalex

#endif  // QALEX_ERRORS_HPP
