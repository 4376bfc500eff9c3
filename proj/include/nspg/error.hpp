#pragma once

#include <stdexcept>
#include <string>

namespace nspg {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Cayley table, group spec, or subgroup violates a structural invariant.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

// A caller passed an argument outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A group-spec string does not match the grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact solver refused to run because the instance exceeds its budget.
// Solvers never approximate; callers decide whether to skip.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nspg
