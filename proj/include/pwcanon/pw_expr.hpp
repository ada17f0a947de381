#pragma once

#include <memory>
#include <vector>

#include "pwcanon/breakpoints.hpp"
#include "pwcanon/piecewise.hpp"

namespace pwcanon {

class PwExpr;
using PwExprPtr = std::shared_ptr<const PwExpr>;

// Piecewise expression before flattening: arithmetic over piece functions and
// case blocks whose branches may themselves be piecewise (definitional
// nesting). Case blocks hold 2n+1 branches in display order.
class PwExpr {
 public:
  enum class Kind { Leaf, Cases, Add, Sub, Mul, Neg };

  Kind kind = Kind::Leaf;
  PieceFunction fn;                     // Leaf
  std::vector<Breakpoint> breakpoints;  // Cases
  std::vector<PwExprPtr> branches;      // Cases
  PwExprPtr lhs, rhs;                   // arithmetic nodes
};

PwExprPtr pw_leaf(PieceFunction f);

// Throws ArityMismatch or UnsortedBreakpoints.
PwExprPtr pw_cases(std::vector<Breakpoint> breakpoints, std::vector<PwExprPtr> branches);

// An already-flat operator as an expression.
PwExprPtr pw_wrap(const PiecewiseOperator& p);

PwExprPtr add(PwExprPtr a, PwExprPtr b);
PwExprPtr sub(PwExprPtr a, PwExprPtr b);
PwExprPtr mul(PwExprPtr a, PwExprPtr b);
PwExprPtr neg(PwExprPtr a);

}  // namespace pwcanon
