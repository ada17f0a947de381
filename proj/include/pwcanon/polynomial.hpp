#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pwcanon/rational.hpp"

namespace pwcanon {

// Dense univariate polynomial over the rationals. Coefficients are stored
// low degree first with no trailing zeros; the zero polynomial is the empty
// sequence, so equal coefficient vectors mean equal polynomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);
  static Polynomial variable();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coefficient(std::size_t k) const;

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned n) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;

  void trim();
};

// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Exact quotient; throws std::logic_error when the division leaves a remainder.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Scale so the leading coefficient is 1; the zero polynomial stays zero.
Polynomial monic(const Polynomial& p);

// Monic greatest common divisor; poly_gcd(0, 0) is zero.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace pwcanon
