#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sadic {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input relative to the mathematics: a digit out of range, a base
/// containing a forbidden block, a word outside an alphabet.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidDigit : public DomainError {
 public:
  using DomainError::DomainError;
};

class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidBase : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidAlphabet : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidEquation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A digit word that does not follow the u^(c-1) c block pattern.
/// `offset()` is the zero-based digit position where decoding failed.
class NotAMember : public DomainError {
 public:
  NotAMember(std::size_t offset, const std::string& what)
      : DomainError("not a member at digit offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A computation refused because it would exceed a configured size budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sadic
