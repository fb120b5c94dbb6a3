#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icotk {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an operation's input was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text could not be parsed. `offset` is the byte offset of the
/// first offending character (or the input length for premature end).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A computation exhausted its configured step budget. Never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Integer factorization gave up before finding all prime factors.
class UnfactoredInput : public Error {
 public:
  using Error::Error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  NotDivisible() : Error("not divisible") {}
};

}  // namespace icotk
