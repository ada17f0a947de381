#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwcanon {

// A piecewise operator needs exactly 2n+1 pieces for n breakpoints.
struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsortedBreakpoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A denominator reduced to the zero polynomial.
struct DivisionByZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonMonotoneConditions : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DuplicateCondition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeBoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised by a piece-function domain that cannot produce a value at a
// breakpoint the canonical-form merge needs.
struct EvaluationUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pwcanon
