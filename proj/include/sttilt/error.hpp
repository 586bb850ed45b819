#pragma once

#include <stdexcept>
#include <string>

namespace sttilt {

/// Base class of all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes, groups or fields of the operands do not match.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A randomized search (MeatAxe, idempotent splitting) ran out of draws.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Some simple module has an endomorphism ring larger than the field.
class SplittingFieldError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (group order, poset nodes) was exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An internal audit or a theorem check failed on concrete data.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sttilt
