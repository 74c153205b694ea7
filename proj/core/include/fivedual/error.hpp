#pragma once

#include <stdexcept>
#include <string>

namespace fivedual {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or groups do not match.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (bad table, bad order, not ALG5, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace fivedual
