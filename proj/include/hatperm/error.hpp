#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hatperm {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (duplicate values, k = 0, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The input is well formed but lies outside the domain of a map, e.g. a
// permutation containing 132 handed to a map defined on 132-avoiders.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A checked integer computation would not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Malformed text. `position` is the 0-based character offset of the fault.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hatperm
