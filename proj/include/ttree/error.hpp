#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ttree {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (T-tree expression, problem file, configuration file).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A type name that is not declared in the type system in use.
class UnknownTypeError : public Error {
 public:
  using Error::Error;
};

// A structural problem or configuration that breaks its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Trees compared under the same-root-type order with different root labels.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

// An operation called outside of its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ttree
