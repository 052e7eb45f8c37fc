#pragma once

#include <stdexcept>
#include <string>

namespace hbl {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated (bad ranges, malformed data).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Evaluation requested at a point outside (or numerically on) the domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The analytic part has a (numerically) vanishing derivative.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

// An iterative or adaptive computation failed to meet its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hbl
