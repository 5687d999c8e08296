#pragma once

#include <stdexcept>
#include <string>

namespace grasp {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index is outside the registry, or two operands belong to
/// different registries.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// A generator has no conjugate partner in the registry.
class PairingError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. exponential of a
/// polynomial with a nonzero constant term).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix or kernel shapes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A state description violates one of its invariants.
class ValidationError : public Error {
 public:
  enum class Kind { Format, Hermiticity, Trace, Parity, Psd };

  ValidationError(Kind kind, const std::string& message)
      : Error(message), m_kind(kind) {}

  Kind kind() const { return m_kind; }

 private:
  Kind m_kind;
};

/// A grid-based transform cannot represent the requested quantity.
class GridError : public Error {
 public:
  using Error::Error;
};

}  // namespace grasp
