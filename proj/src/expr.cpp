#include "pwcanon/expr.hpp"

#include <stdexcept>
#include <utility>

namespace pwcanon {

namespace {

std::shared_ptr<Expr> node(Expr::Kind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

void require(const PieceFunction& f) {
  if (!f) throw std::invalid_argument("null piece function");
}

}  // namespace

PieceFunction constant(Rational c) {
  auto e = node(Expr::Kind::Constant);
  e->value = std::move(c);
  return e;
}

PieceFunction variable() { return node(Expr::Kind::Var); }

PieceFunction add(PieceFunction a, PieceFunction b) {
  require(a);
  require(b);
  auto e = node(Expr::Kind::Add);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PieceFunction sub(PieceFunction a, PieceFunction b) {
  require(a);
  require(b);
  auto e = node(Expr::Kind::Sub);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PieceFunction mul(PieceFunction a, PieceFunction b) {
  require(a);
  require(b);
  auto e = node(Expr::Kind::Mul);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PieceFunction divide(PieceFunction a, PieceFunction b) {
  require(a);
  require(b);
  auto e = node(Expr::Kind::Div);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PieceFunction neg(PieceFunction a) {
  require(a);
  auto e = node(Expr::Kind::Neg);
  e->lhs = std::move(a);
  return e;
}

PieceFunction pow(PieceFunction base, unsigned n) {
  require(base);
  auto e = node(Expr::Kind::Pow);
  e->lhs = std::move(base);
  e->exponent = n;
  return e;
}

PieceFunction from_poly(Polynomial p) {
  auto e = node(Expr::Kind::Poly);
  e->poly = std::move(p);
  return e;
}

PieceFunction from_ratfun(Polynomial num, Polynomial den) {
  auto e = node(Expr::Kind::RatFun);
  e->num = std::move(num);
  e->den = std::move(den);
  return e;
}

bool structural_equal(const PieceFunction& a, const PieceFunction& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Constant:
      return a->value == b->value;
    case Expr::Kind::Var:
      return true;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return structural_equal(a->lhs, b->lhs) && structural_equal(a->rhs, b->rhs);
    case Expr::Kind::Neg:
      return structural_equal(a->lhs, b->lhs);
    case Expr::Kind::Pow:
      return a->exponent == b->exponent && structural_equal(a->lhs, b->lhs);
    case Expr::Kind::Poly:
      return a->poly == b->poly;
    case Expr::Kind::RatFun:
      return a->num == b->num && a->den == b->den;
  }
  return false;
}

namespace {

Rational rational_pow(const Rational& base, unsigned n) {
  Rational acc(1);
  Rational b = base;
  while (n != 0) {
    if (n & 1u) acc *= b;
    n >>= 1u;
    if (n != 0) b *= b;
  }
  return acc;
}

}  // namespace

Value tree_eval(const PieceFunction& f, const Rational& x) {
  require(f);
  switch (f->kind) {
    case Expr::Kind::Constant:
      return Value::defined(f->value);
    case Expr::Kind::Var:
      return Value::defined(x);
    case Expr::Kind::Add: {
      Value l = tree_eval(f->lhs, x), r = tree_eval(f->rhs, x);
      if (!l.is_defined() || !r.is_defined()) return Value::undefined();
      return Value::defined(l.get() + r.get());
    }
    case Expr::Kind::Sub: {
      Value l = tree_eval(f->lhs, x), r = tree_eval(f->rhs, x);
      if (!l.is_defined() || !r.is_defined()) return Value::undefined();
      return Value::defined(l.get() - r.get());
    }
    case Expr::Kind::Mul: {
      Value l = tree_eval(f->lhs, x), r = tree_eval(f->rhs, x);
      if (!l.is_defined() || !r.is_defined()) return Value::undefined();
      return Value::defined(l.get() * r.get());
    }
    case Expr::Kind::Div: {
      Value l = tree_eval(f->lhs, x), r = tree_eval(f->rhs, x);
      if (!l.is_defined() || !r.is_defined() || r.get() == 0) return Value::undefined();
      return Value::defined(l.get() / r.get());
    }
    case Expr::Kind::Neg: {
      Value l = tree_eval(f->lhs, x);
      if (!l.is_defined()) return Value::undefined();
      return Value::defined(-l.get());
    }
    case Expr::Kind::Pow: {
      Value l = tree_eval(f->lhs, x);
      if (!l.is_defined()) return Value::undefined();
      return Value::defined(rational_pow(l.get(), f->exponent));
    }
    case Expr::Kind::Poly:
      return Value::defined(f->poly(x));
    case Expr::Kind::RatFun: {
      Rational d = f->den(x);
      if (d == 0) return Value::undefined();
      return Value::defined(f->num(x) / d);
    }
  }
  return Value::undefined();
}

}  // namespace pwcanon
