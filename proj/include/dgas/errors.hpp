#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Argument outside the supported domain (orders above caps, bad alpha, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// The factorization effort budget ran out before every factor was proven prime.
class FactorizationIncomplete : public Error {
 public:
  using Error::Error;
};

/// A constructed certificate failed its own postcondition checks.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace dgas
