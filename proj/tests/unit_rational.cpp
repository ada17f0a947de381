#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pwcanon/perf.hpp"
#include "pwcanon/rational.hpp"

using namespace pwcanon;

TEST_CASE("make_rational reduces to lowest terms with a positive denominator") {
  Rational r = make_rational(3, -6);
  CHECK(numerator(r) == -1);
  CHECK(denominator(r) == 2);

  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(numerator(make_rational(0, 5)) == 0);
  CHECK(denominator(make_rational(0, 5)) == 1);
  CHECK(make_rational(-4, -2) == 2);
}

TEST_CASE("make_rational rejects a zero denominator") {
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("compare is consistent with cross-multiplication") {
  CHECK(compare(make_rational(1, 2), make_rational(2, 4)) == Ordering::Equal);
  CHECK(compare(make_rational(-3, 1), make_rational(0, 1)) == Ordering::Less);
  // 7*4 = 28 against 9*3 = 27
  CHECK(compare(make_rational(7, 3), make_rational(9, 4)) == Ordering::Greater);
}

TEST_CASE("compare satisfies trichotomy and antisymmetry on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  for (int i = 0; i < 300; ++i) {
    Rational a = make_rational(num(rng), den(rng));
    Rational b = make_rational(num(rng), den(rng));
    Ordering ab = compare(a, b);
    Ordering ba = compare(b, a);
    switch (ab) {
      case Ordering::Less: CHECK(ba == Ordering::Greater); break;
      case Ordering::Equal: CHECK(ba == Ordering::Equal); break;
      case Ordering::Greater: CHECK(ba == Ordering::Less); break;
    }
    CHECK((ab == Ordering::Equal) == (a == b));
  }
}

TEST_CASE("every compare call is counted") {
  perf::reset();
  compare(Rational(1), Rational(2));
  compare(Rational(2), Rational(2));
  compare(Rational(3), Rational(2));
  CHECK(perf::counters().order_comparisons == 3);
  CHECK(perf::counters().canonicalize_calls == 0);
}

TEST_CASE("to_string writes integers bare and fractions with a slash") {
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_string(make_rational(0, 3)) == "0");
}
