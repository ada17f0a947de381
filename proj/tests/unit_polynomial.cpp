#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "pwcanon/polynomial.hpp"

using namespace pwcanon;

namespace {

Polynomial poly(std::vector<int> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(c));
}

Polynomial random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Rational> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("trailing zero coefficients are trimmed away") {
  CHECK(poly({1, 0, 0}).degree() == 0);
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(poly({1, 0, 0}) == poly({1}));
}

TEST_CASE("constant and variable factories") {
  CHECK(Polynomial::constant(Rational(7)).degree() == 0);
  CHECK(Polynomial::constant(Rational(0)).is_zero());
  CHECK(Polynomial::variable() == poly({0, 1}));
}

TEST_CASE("evaluation uses exact rational arithmetic") {
  // x^3 - 7x^2 + 16x - 12 has a root at 2: 8 - 28 + 32 - 12
  Polynomial cubic = poly({-12, 16, -7, 1});
  CHECK(cubic(Rational(2)) == 0);
  CHECK(cubic(Rational(0)) == -12);
  CHECK(cubic(make_rational(1, 2)) == make_rational(-45, 8));
  CHECK(Polynomial()(Rational(99)) == 0);
}

TEST_CASE("ring operations expand exactly") {
  Polynomial xp1 = poly({1, 1});
  Polynomial xm1 = poly({-1, 1});
  CHECK(xp1 * xm1 == poly({-1, 0, 1}));
  CHECK(xp1 + xm1 == poly({0, 2}));
  CHECK(xp1 - xp1 == Polynomial());
  CHECK(-poly({1, 2, 1}) == poly({-1, -2, -1}));
  CHECK(xp1.pow(2) == poly({1, 2, 1}));
  CHECK(xp1.pow(0) == Polynomial::constant(Rational(1)));
  CHECK(Polynomial().pow(0) == Polynomial::constant(Rational(1)));
}

TEST_CASE("divmod produces exact quotient and remainder") {
  auto [q, r] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());

  auto [q2, r2] = divmod(poly({1, 0, 1}), poly({-1, 1}));
  CHECK(q2 * poly({-1, 1}) + r2 == poly({1, 0, 1}));
  CHECK(r2.degree() < 1);

  CHECK_THROWS_AS(divmod(poly({1}), Polynomial()), std::domain_error);
}

TEST_CASE("divide_exact demands a zero remainder") {
  CHECK(divide_exact(poly({-1, 0, 1}), poly({-1, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(divide_exact(poly({1, 0, 1}), poly({-1, 1})), std::logic_error);
}

TEST_CASE("monic scales the leading coefficient to one") {
  CHECK(monic(poly({-2, 2})) == poly({-1, 1}));
  CHECK(monic(Polynomial()).is_zero());
}

TEST_CASE("gcd of x^2-1 and 2x-2 is the monic x-1") {
  CHECK(poly_gcd(poly({-1, 0, 1}), poly({-2, 2})) == poly({-1, 1}));
  CHECK(poly_gcd(poly({-1, 0, 1}), Polynomial()) == poly({-1, 0, 1}));
  CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("gcd divides both arguments on random pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng, 5);
    Polynomial b = random_poly(rng, 5);
    Polynomial g = poly_gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(g.leading() == 1);
  }
}
