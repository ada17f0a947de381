#include "pwcanon/pw_expr.hpp"

#include <stdexcept>
#include <utility>

#include "pwcanon/errors.hpp"

namespace pwcanon {

namespace {

std::shared_ptr<PwExpr> node(PwExpr::Kind k) {
  auto e = std::make_shared<PwExpr>();
  e->kind = k;
  return e;
}

void require(const PwExprPtr& e) {
  if (!e) throw std::invalid_argument("null piecewise expression");
}

}  // namespace

PwExprPtr pw_leaf(PieceFunction f) {
  if (!f) throw std::invalid_argument("null piece function");
  auto e = node(PwExpr::Kind::Leaf);
  e->fn = std::move(f);
  return e;
}

PwExprPtr pw_cases(std::vector<Breakpoint> breakpoints, std::vector<PwExprPtr> branches) {
  if (branches.size() != 2 * breakpoints.size() + 1)
    throw ArityMismatch("expected " + std::to_string(2 * breakpoints.size() + 1) +
                        " branches for " + std::to_string(breakpoints.size()) +
                        " breakpoints, got " + std::to_string(branches.size()));
  for (const PwExprPtr& b : branches) require(b);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (compare(breakpoints[i], breakpoints[i + 1]) != Ordering::Less)
      throw UnsortedBreakpoints("breakpoints must be strictly increasing");
  }
  auto e = node(PwExpr::Kind::Cases);
  e->breakpoints = std::move(breakpoints);
  e->branches = std::move(branches);
  return e;
}

PwExprPtr pw_wrap(const PiecewiseOperator& p) {
  if (p.breakpoint_count() == 0) return pw_leaf(p.end_piece().fn);
  std::vector<Breakpoint> bps;
  std::vector<PwExprPtr> branches;
  branches.reserve(p.piece_count());
  for (const CondPair& cp : p.pairs()) {
    bps.push_back(cp.right_pt);
    branches.push_back(pw_leaf(cp.left_fn));
    branches.push_back(pw_leaf(cp.pt_fn));
  }
  branches.push_back(pw_leaf(p.end_piece().fn));
  return pw_cases(std::move(bps), std::move(branches));
}

PwExprPtr add(PwExprPtr a, PwExprPtr b) {
  require(a);
  require(b);
  auto e = node(PwExpr::Kind::Add);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PwExprPtr sub(PwExprPtr a, PwExprPtr b) {
  require(a);
  require(b);
  auto e = node(PwExpr::Kind::Sub);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PwExprPtr mul(PwExprPtr a, PwExprPtr b) {
  require(a);
  require(b);
  auto e = node(PwExpr::Kind::Mul);
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PwExprPtr neg(PwExprPtr a) {
  require(a);
  auto e = node(PwExpr::Kind::Neg);
  e->lhs = std::move(a);
  return e;
}

}  // namespace pwcanon
