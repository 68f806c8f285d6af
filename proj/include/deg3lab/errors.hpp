#pragma once

#include <stdexcept>
#include <string>

namespace deg3lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search hit its node budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list or witness input.
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

}  // namespace detail
}  // namespace deg3lab
