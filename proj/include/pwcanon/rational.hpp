#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pwcanon {

using Int = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms with a positive denominator, so
// structural equality coincides with mathematical equality.
using Rational = boost::multiprecision::cpp_rational;

// Breakpoints are exact rationals; real algebraic numbers stay an extension
// point behind compare().
using Breakpoint = Rational;

enum class Ordering { Less, Equal, Greater };

// num/den reduced and sign-normalized; throws std::domain_error on den == 0.
Rational make_rational(const Int& num, const Int& den);

// Three-way total order. Each call counts as one comparison toward the
// instrumentation in perf.hpp.
Ordering compare(const Rational& a, const Rational& b);

std::string to_string(const Rational& r);

}  // namespace pwcanon
