#pragma once

#include <optional>
#include <utility>

#include "pwcanon/rational.hpp"

namespace pwcanon {

// Result of evaluating a piece function at a point: an exact rational, or
// undefined (the bottom value of a partial function). Undefined equals
// Undefined; undefinedness is data, not an error.
class Value {
 public:
  static Value defined(Rational v) { return Value(std::move(v)); }
  static Value undefined() { return Value(); }

  bool is_defined() const noexcept { return v_.has_value(); }
  const Rational& get() const { return v_.value(); }

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Value() = default;
  explicit Value(Rational v) : v_(std::move(v)) {}

  std::optional<Rational> v_;
};

}  // namespace pwcanon
