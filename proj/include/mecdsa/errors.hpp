#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mecdsa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation: values from
/// different fields, off-curve points, t = 0, out-of-range scalars.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Bytes that cannot be decompressed or decoded into a curve point.
class InvalidPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed serialized input. `offset()` is a byte offset for binary
/// formats and a 1-based line number for text documents.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit FormatError(const std::string& what) : Error(what), offset_(0) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class DuplicateNameError : public Error {
 public:
  using Error::Error;
};

/// A test-mode nonce list ran out before a valid signature was produced.
class NonceExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace mecdsa
