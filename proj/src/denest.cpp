#include "pwcanon/denest.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace pwcanon {

namespace {

// The pairs of q lying strictly inside (lo, hi), plus the function governing
// the sub-segment that ends at hi. Null bounds mean unbounded.
struct Restriction {
  std::vector<CondPair> inner;
  PieceFunction tail;
};

Restriction restrict_to(const PiecewiseOperator& q, const Breakpoint* lo, const Breakpoint* hi) {
  Restriction r;
  const auto& pairs = q.pairs();
  std::size_t i = 0;
  while (i < pairs.size() && lo && compare(pairs[i].right_pt, *lo) != Ordering::Greater) ++i;
  for (; i < pairs.size(); ++i) {
    if (hi && compare(pairs[i].right_pt, *hi) != Ordering::Less) break;
    r.inner.push_back(pairs[i]);
  }
  r.tail = i < pairs.size() ? pairs[i].left_fn : q.end_piece().fn;
  return r;
}

PiecewiseOperator denest_cases(const std::vector<Breakpoint>& bps,
                               const std::vector<PiecewiseOperator>& sub) {
  const std::size_t n = bps.size();
  std::vector<CondPair> out;
  for (std::size_t j = 0; j < n; ++j) {
    const Breakpoint* lo = j > 0 ? &bps[j - 1] : nullptr;
    Restriction r = restrict_to(sub[2 * j], lo, &bps[j]);
    for (CondPair& cp : r.inner) out.push_back(std::move(cp));
    const PiecewiseOperator& at_point = sub[2 * j + 1];
    PieceFunction pt_fn = select(at_point, chi(at_point, bps[j]));
    out.push_back({std::move(r.tail), std::move(pt_fn), bps[j]});
  }
  const Breakpoint* lo = n > 0 ? &bps[n - 1] : nullptr;
  Restriction r = restrict_to(sub[2 * n], lo, nullptr);
  for (CondPair& cp : r.inner) out.push_back(std::move(cp));
  return PiecewiseOperator(std::move(out), EndPiece{std::move(r.tail)});
}

}  // namespace

PiecewiseOperator denest(const PwExprPtr& e, const EffectiveDomain& dom) {
  if (!e) throw std::invalid_argument("null piecewise expression");
  switch (e->kind) {
    case PwExpr::Kind::Leaf:
      return PiecewiseOperator({}, EndPiece{e->fn});
    case PwExpr::Kind::Add:
      return pw_add(denest(e->lhs, dom), denest(e->rhs, dom), dom);
    case PwExpr::Kind::Sub:
      return pw_sub(denest(e->lhs, dom), denest(e->rhs, dom), dom);
    case PwExpr::Kind::Mul:
      return pw_mul(denest(e->lhs, dom), denest(e->rhs, dom), dom);
    case PwExpr::Kind::Neg:
      return pw_neg(denest(e->lhs, dom), dom);
    case PwExpr::Kind::Cases: {
      std::vector<PiecewiseOperator> sub;
      sub.reserve(e->branches.size());
      for (const PwExprPtr& b : e->branches) sub.push_back(denest(b, dom));
      if (e->breakpoints.empty()) return sub[0];
      return denest_cases(e->breakpoints, sub);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace pwcanon
