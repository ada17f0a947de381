#include "pwcanon/domain.hpp"

#include <stdexcept>
#include <utility>

#include "pwcanon/perf.hpp"

namespace pwcanon {

bool EffectiveDomain::equiv(const PieceFunction& f, const PieceFunction& g) const {
  return structural_equal(canonicalize(f), canonicalize(g));
}

bool EffectiveDomain::is_zero(const PieceFunction& f) const { return equiv(f, zero()); }

namespace {

Polynomial to_polynomial(const PieceFunction& f) {
  switch (f->kind) {
    case Expr::Kind::Constant:
      return Polynomial::constant(f->value);
    case Expr::Kind::Var:
      return Polynomial::variable();
    case Expr::Kind::Add:
      return to_polynomial(f->lhs) + to_polynomial(f->rhs);
    case Expr::Kind::Sub:
      return to_polynomial(f->lhs) - to_polynomial(f->rhs);
    case Expr::Kind::Mul:
      return to_polynomial(f->lhs) * to_polynomial(f->rhs);
    case Expr::Kind::Neg:
      return -to_polynomial(f->lhs);
    case Expr::Kind::Pow:
      return to_polynomial(f->lhs).pow(f->exponent);
    case Expr::Kind::Poly:
      return f->poly;
    case Expr::Kind::Div:
    case Expr::Kind::RatFun:
      throw std::invalid_argument("piece uses division outside the rational-expression domain");
  }
  return Polynomial();
}

struct RatPair {
  Polynomial num, den;
};

RatPair to_ratpair(const PieceFunction& f) {
  switch (f->kind) {
    case Expr::Kind::Constant:
      return {Polynomial::constant(f->value), Polynomial::constant(Rational(1))};
    case Expr::Kind::Var:
      return {Polynomial::variable(), Polynomial::constant(Rational(1))};
    case Expr::Kind::Add: {
      RatPair a = to_ratpair(f->lhs), b = to_ratpair(f->rhs);
      return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    case Expr::Kind::Sub: {
      RatPair a = to_ratpair(f->lhs), b = to_ratpair(f->rhs);
      return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    case Expr::Kind::Mul: {
      RatPair a = to_ratpair(f->lhs), b = to_ratpair(f->rhs);
      return {a.num * b.num, a.den * b.den};
    }
    case Expr::Kind::Div: {
      RatPair a = to_ratpair(f->lhs), b = to_ratpair(f->rhs);
      return {a.num * b.den, a.den * b.num};
    }
    case Expr::Kind::Neg: {
      RatPair a = to_ratpair(f->lhs);
      return {-a.num, std::move(a.den)};
    }
    case Expr::Kind::Pow: {
      RatPair a = to_ratpair(f->lhs);
      return {a.num.pow(f->exponent), a.den.pow(f->exponent)};
    }
    case Expr::Kind::Poly:
      return {f->poly, Polynomial::constant(Rational(1))};
    case Expr::Kind::RatFun:
      return {f->num, f->den};
  }
  return {Polynomial(), Polynomial::constant(Rational(1))};
}

RatPair reduce(RatPair r) {
  if (r.den.is_zero())
    throw DivisionByZeroPolynomial("denominator reduces to the zero polynomial");
  if (r.num.is_zero()) return {Polynomial(), Polynomial::constant(Rational(1))};
  Polynomial g = poly_gcd(r.num, r.den);
  if (g.degree() > 0) {
    r.num = divide_exact(r.num, g);
    r.den = divide_exact(r.den, g);
  }
  if (r.den.leading() != 1) {
    Polynomial scale = Polynomial::constant(Rational(1) / r.den.leading());
    r.num = r.num * scale;
    r.den = r.den * scale;
  }
  return r;
}

}  // namespace

PieceFunction PolynomialDomain::canonicalize(const PieceFunction& f) const {
  ++perf::counters().canonicalize_calls;
  if (f->kind == Expr::Kind::Poly) return f;
  return from_poly(to_polynomial(f));
}

Value PolynomialDomain::eval_at(const PieceFunction& f, const Rational& b) const {
  return tree_eval(f, b);
}

PieceFunction PolynomialDomain::constant(const Rational& v) const {
  return from_poly(Polynomial::constant(v));
}

PieceFunction PolynomialDomain::add(const PieceFunction& f, const PieceFunction& g) const {
  return from_poly(to_polynomial(f) + to_polynomial(g));
}

PieceFunction PolynomialDomain::sub(const PieceFunction& f, const PieceFunction& g) const {
  return from_poly(to_polynomial(f) - to_polynomial(g));
}

PieceFunction PolynomialDomain::mul(const PieceFunction& f, const PieceFunction& g) const {
  return from_poly(to_polynomial(f) * to_polynomial(g));
}

PieceFunction PolynomialDomain::neg(const PieceFunction& f) const {
  return from_poly(-to_polynomial(f));
}

PieceFunction RationalFunctionDomain::canonicalize(const PieceFunction& f) const {
  ++perf::counters().canonicalize_calls;
  RatPair r = reduce(to_ratpair(f));
  if (f->kind == Expr::Kind::RatFun && f->num == r.num && f->den == r.den) return f;
  return from_ratfun(std::move(r.num), std::move(r.den));
}

Value RationalFunctionDomain::eval_at(const PieceFunction& f, const Rational& b) const {
  RatPair r;
  try {
    r = reduce(to_ratpair(f));
  } catch (const DivisionByZeroPolynomial&) {
    return Value::undefined();
  }
  Rational d = r.den(b);
  if (d == 0) return Value::undefined();
  return Value::defined(r.num(b) / d);
}

PieceFunction RationalFunctionDomain::constant(const Rational& v) const {
  return from_ratfun(Polynomial::constant(v), Polynomial::constant(Rational(1)));
}

PieceFunction RationalFunctionDomain::add(const PieceFunction& f, const PieceFunction& g) const {
  RatPair a = to_ratpair(f), b = to_ratpair(g);
  RatPair r = reduce({a.num * b.den + b.num * a.den, a.den * b.den});
  return from_ratfun(std::move(r.num), std::move(r.den));
}

PieceFunction RationalFunctionDomain::sub(const PieceFunction& f, const PieceFunction& g) const {
  RatPair a = to_ratpair(f), b = to_ratpair(g);
  RatPair r = reduce({a.num * b.den - b.num * a.den, a.den * b.den});
  return from_ratfun(std::move(r.num), std::move(r.den));
}

PieceFunction RationalFunctionDomain::mul(const PieceFunction& f, const PieceFunction& g) const {
  RatPair a = to_ratpair(f), b = to_ratpair(g);
  RatPair r = reduce({a.num * b.num, a.den * b.den});
  return from_ratfun(std::move(r.num), std::move(r.den));
}

PieceFunction RationalFunctionDomain::neg(const PieceFunction& f) const {
  RatPair a = reduce(to_ratpair(f));
  return from_ratfun(-a.num, std::move(a.den));
}

const PolynomialDomain& default_domain() {
  static const PolynomialDomain d;
  return d;
}

}  // namespace pwcanon
