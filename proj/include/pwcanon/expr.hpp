#pragma once

#include <memory>

#include "pwcanon/polynomial.hpp"
#include "pwcanon/value.hpp"

namespace pwcanon {

class Expr;

// Piece functions are immutable expression trees shared by reference.
using PieceFunction = std::shared_ptr<const Expr>;

// Expression tree over rational constants, the variable x, ring operations,
// non-negative integer powers, and division. Canonicalization rewrites a tree
// into a single Poly or RatFun leaf; leaves are ordinary nodes, so raw and
// canonical pieces share one type.
class Expr {
 public:
  enum class Kind { Constant, Var, Add, Sub, Mul, Div, Neg, Pow, Poly, RatFun };

  Kind kind = Kind::Constant;
  Rational value;           // Constant
  PieceFunction lhs, rhs;   // Add/Sub/Mul/Div both, Neg/Pow lhs only
  unsigned exponent = 0;    // Pow
  Polynomial poly;          // Poly
  Polynomial num, den;      // RatFun
};

PieceFunction constant(Rational c);
PieceFunction variable();
PieceFunction add(PieceFunction a, PieceFunction b);
PieceFunction sub(PieceFunction a, PieceFunction b);
PieceFunction mul(PieceFunction a, PieceFunction b);
PieceFunction divide(PieceFunction a, PieceFunction b);
PieceFunction neg(PieceFunction a);
PieceFunction pow(PieceFunction base, unsigned n);
PieceFunction from_poly(Polynomial p);
PieceFunction from_ratfun(Polynomial num, Polynomial den);

bool structural_equal(const PieceFunction& a, const PieceFunction& b);

// Direct recursive evaluation; division by a vanishing subexpression yields
// Undefined. Performs no canonicalization.
Value tree_eval(const PieceFunction& f, const Rational& x);

}  // namespace pwcanon
