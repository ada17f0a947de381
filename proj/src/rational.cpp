#include "pwcanon/rational.hpp"

#include <stdexcept>

#include "pwcanon/perf.hpp"

namespace pwcanon {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // The two-argument constructor rejects negative denominators; division
  // normalizes both sign and common factors.
  return Rational(num) / Rational(den);
}

Ordering compare(const Rational& a, const Rational& b) {
  ++perf::counters().order_comparisons;
  const int c = a.compare(b);
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

}  // namespace pwcanon
