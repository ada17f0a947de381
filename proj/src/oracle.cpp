#include "pwcanon/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pwcanon/errors.hpp"
#include "pwcanon/expr.hpp"

namespace pwcanon {

namespace {

// Piece selection by linear scan with plain rational comparisons; the oracle
// must not share the instrumented search path it is checking.
const PieceFunction& scan_select(const PiecewiseOperator& p, const Rational& lambda) {
  for (const CondPair& c : p.pairs()) {
    if (lambda < c.right_pt) return c.left_fn;
    if (lambda == c.right_pt) return c.pt_fn;
  }
  return p.end_piece().fn;
}

Value probe(const PiecewiseOperator& p, const Rational& lambda) {
  return tree_eval(scan_select(p, lambda), lambda);
}

// Division-free pieces convert to a plain polynomial for the degree guard;
// nullopt exempts a piece from the guard (and the oracle is then only a
// counterexample finder on it).
std::optional<Polynomial> as_polynomial(const PieceFunction& f) {
  switch (f->kind) {
    case Expr::Kind::Constant:
      return Polynomial::constant(f->value);
    case Expr::Kind::Var:
      return Polynomial::variable();
    case Expr::Kind::Add: {
      auto a = as_polynomial(f->lhs), b = as_polynomial(f->rhs);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case Expr::Kind::Sub: {
      auto a = as_polynomial(f->lhs), b = as_polynomial(f->rhs);
      if (!a || !b) return std::nullopt;
      return *a - *b;
    }
    case Expr::Kind::Mul: {
      auto a = as_polynomial(f->lhs), b = as_polynomial(f->rhs);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case Expr::Kind::Neg: {
      auto a = as_polynomial(f->lhs);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Expr::Kind::Pow: {
      auto a = as_polynomial(f->lhs);
      if (!a) return std::nullopt;
      return a->pow(f->exponent);
    }
    case Expr::Kind::Poly:
      return f->poly;
    case Expr::Kind::Div:
    case Expr::Kind::RatFun:
      return std::nullopt;
  }
  return std::nullopt;
}

void guard_degrees(const PiecewiseOperator& p, int degree_bound) {
  for (std::size_t i = 0; i < p.piece_count(); ++i) {
    auto poly = as_polynomial(p.piece(i));
    if (poly && poly->degree() > degree_bound)
      throw DegreeBoundExceeded("piece of degree " + std::to_string(poly->degree()) +
                                " exceeds oracle bound " + std::to_string(degree_bound));
  }
}

}  // namespace

SamplePlan sample_points(const BreakpointSet& bs, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const int m = degree_bound + 1;

  std::vector<Rational> pts;
  if (bs.empty()) {
    for (int k = 0; k < m; ++k) pts.emplace_back(k);
    return {BreakpointSet::from_unsorted(std::move(pts)), static_cast<std::size_t>(m)};
  }

  pts.reserve(bs.size() * (m + 2) + 2 * m);
  for (const Breakpoint& b : bs) pts.push_back(b);
  for (int k = 1; k <= m; ++k) {
    pts.push_back(bs.front() - k);
    pts.push_back(bs.back() + k);
  }
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    const Rational& lo = bs[i];
    const Rational width = bs[i + 1] - lo;
    pts.push_back(lo + width / 2);
    for (int k = 1; k <= m; ++k) pts.push_back(lo + width * k / (m + 1));
  }
  return {BreakpointSet::from_unsorted(std::move(pts)), static_cast<std::size_t>(m)};
}

bool extensional_equiv_oracle(const PiecewiseOperator& p, const PiecewiseOperator& q,
                              int degree_bound) {
  guard_degrees(p, degree_bound);
  guard_degrees(q, degree_bound);

  SamplePlan plan = sample_points(merge_breakpoints(p.breakpoints(), q.breakpoints()),
                                  degree_bound);
  for (const Rational& lambda : plan.points) {
    if (!(probe(p, lambda) == probe(q, lambda))) return false;
  }
  return true;
}

}  // namespace pwcanon
