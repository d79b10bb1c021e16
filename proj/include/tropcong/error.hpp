#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropcong {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed polyhedral complex, chart or certificate.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropcong
