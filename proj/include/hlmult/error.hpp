#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlm {

// Division by the zero rational function.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Evaluation of a rational function at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rational function that was expected to be an integer polynomial is not.
class NotPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Mismatched sizes or shapes between arguments.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input; carries the byte offset of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hlm
