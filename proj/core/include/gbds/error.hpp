#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbds {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not belong together (different algebras, unknown labels,
/// malformed values).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A path or open set lies outside the domain of a partial map.
class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A family of filters failed the completeness condition.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A query needs more refinement depth than the certificate provides.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

/// The instance is outside what the exact algorithms can handle
/// (for example an infinite boundary path space).
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace gbds
