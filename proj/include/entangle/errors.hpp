#pragma once

#include <stdexcept>
#include <string>

namespace entangle {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or bipartite dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input fails a structural invariant (Hermiticity, unit trace, positivity, norm).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iterative routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Valid input that the operation deliberately does not support (e.g. qudit encodings).
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace entangle
