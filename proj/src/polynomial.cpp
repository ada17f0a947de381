#include "pwcanon/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwcanon {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::variable() {
  Polynomial p;
  p.coeffs_ = {Rational(0), Rational(1)};
  return p;
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial acc = Polynomial::constant(Rational(1));
  Polynomial base(*this);
  while (n != 0) {
    if (n & 1u) acc = acc * base;
    n >>= 1u;
    if (n != 0) base = base * base;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] / lead;
    if (f == 0) continue;
    quot[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k + i)] -= f * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division left a remainder");
  return q;
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  std::vector<Rational> out = p.coefficients();
  const Rational lead = p.leading();
  for (auto& c : out) c /= lead;
  return Polynomial(std::move(out));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

}  // namespace pwcanon
