#include "pwcanon/piecewise.hpp"

#include <stdexcept>
#include <utility>

#include "pwcanon/errors.hpp"

namespace pwcanon {

PiecewiseOperator::PiecewiseOperator(std::vector<CondPair> pairs, EndPiece end)
    : pairs_(std::move(pairs)), end_(std::move(end)) {
  for (const CondPair& cp : pairs_) {
    if (!cp.left_fn || !cp.pt_fn) throw std::invalid_argument("null piece function");
  }
  if (!end_.fn) throw std::invalid_argument("null end piece");
  for (std::size_t i = 0; i + 1 < pairs_.size(); ++i) {
    if (compare(pairs_[i].right_pt, pairs_[i + 1].right_pt) != Ordering::Less)
      throw UnsortedBreakpoints("breakpoints must be strictly increasing");
  }
}

const PieceFunction& PiecewiseOperator::piece(std::size_t i) const {
  if (i == 2 * pairs_.size()) return end_.fn;
  if (i >= 2 * pairs_.size()) throw std::out_of_range("piece index");
  return (i % 2 == 0) ? pairs_[i / 2].left_fn : pairs_[i / 2].pt_fn;
}

BreakpointSet PiecewiseOperator::breakpoints() const {
  std::vector<Breakpoint> pts;
  pts.reserve(pairs_.size());
  for (const CondPair& cp : pairs_) pts.push_back(cp.right_pt);
  return BreakpointSet(std::move(pts));
}

PiecewiseOperator make(const BreakpointSet& breakpoints, std::vector<PieceFunction> funcs) {
  const std::size_t n = breakpoints.size();
  if (funcs.size() != 2 * n + 1)
    throw ArityMismatch("expected " + std::to_string(2 * n + 1) + " pieces for " +
                        std::to_string(n) + " breakpoints, got " + std::to_string(funcs.size()));
  std::vector<CondPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pairs.push_back({std::move(funcs[2 * i]), std::move(funcs[2 * i + 1]), breakpoints[i]});
  return PiecewiseOperator(std::move(pairs), EndPiece{std::move(funcs[2 * n])});
}

RegionLocator chi(const PiecewiseOperator& p, const Breakpoint& lambda) {
  const auto& pairs = p.pairs();
  std::size_t lo = 0, hi = pairs.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    switch (compare(lambda, pairs[mid].right_pt)) {
      case Ordering::Equal:
        return RegionLocator::at_breakpoint(mid);
      case Ordering::Less:
        hi = mid;
        break;
      case Ordering::Greater:
        lo = mid + 1;
        break;
    }
  }
  return RegionLocator::open_region(lo);
}

const PieceFunction& select(const PiecewiseOperator& p, const RegionLocator& where) {
  if (where.kind == RegionLocator::Kind::AtBreakpoint) return p.pairs()[where.index].pt_fn;
  return where.index < p.pairs().size() ? p.pairs()[where.index].left_fn : p.end_piece().fn;
}

Value evaluate(const PiecewiseOperator& p, const Breakpoint& lambda, const EffectiveDomain& dom) {
  return dom.eval_at(select(p, chi(p, lambda)), lambda);
}

PiecewiseOperator refine(const PiecewiseOperator& p, const BreakpointSet& a) {
  const auto& pairs = p.pairs();
  std::vector<CondPair> out;
  out.reserve(pairs.size() + a.size());
  std::size_t i = 0;
  for (const Breakpoint& pt : a) {
    while (i < pairs.size() && compare(pairs[i].right_pt, pt) == Ordering::Less)
      out.push_back(pairs[i++]);
    if (i < pairs.size() && compare(pairs[i].right_pt, pt) == Ordering::Equal) continue;
    const PieceFunction& region = i < pairs.size() ? pairs[i].left_fn : p.end_piece().fn;
    out.push_back({region, region, pt});
  }
  for (; i < pairs.size(); ++i) out.push_back(pairs[i]);
  return PiecewiseOperator(std::move(out), p.end_piece());
}

PiecewiseOperator lift_unary(const UnaryPieceFn& psi, const PiecewiseOperator& p) {
  std::vector<CondPair> out;
  out.reserve(p.pairs().size());
  for (const CondPair& cp : p.pairs())
    out.push_back({psi(cp.left_fn), psi(cp.pt_fn), cp.right_pt});
  return PiecewiseOperator(std::move(out), EndPiece{psi(p.end_piece().fn)});
}

PiecewiseOperator lift_binary(const BinaryPieceFn& psi, const PiecewiseOperator& p1,
                              const PiecewiseOperator& p2) {
  const BreakpointSet common = merge_breakpoints(p1.breakpoints(), p2.breakpoints());
  const PiecewiseOperator q1 = refine(p1, common);
  const PiecewiseOperator q2 = refine(p2, common);
  std::vector<CondPair> out;
  out.reserve(common.size());
  for (std::size_t i = 0; i < common.size(); ++i) {
    const CondPair& a = q1.pairs()[i];
    const CondPair& b = q2.pairs()[i];
    out.push_back({psi(a.left_fn, b.left_fn), psi(a.pt_fn, b.pt_fn), a.right_pt});
  }
  return PiecewiseOperator(std::move(out),
                           EndPiece{psi(q1.end_piece().fn, q2.end_piece().fn)});
}

PiecewiseOperator pw_add(const PiecewiseOperator& p1, const PiecewiseOperator& p2,
                         const EffectiveDomain& dom) {
  return lift_binary([&dom](const PieceFunction& f, const PieceFunction& g) { return dom.add(f, g); },
                     p1, p2);
}

PiecewiseOperator pw_sub(const PiecewiseOperator& p1, const PiecewiseOperator& p2,
                         const EffectiveDomain& dom) {
  return lift_binary([&dom](const PieceFunction& f, const PieceFunction& g) { return dom.sub(f, g); },
                     p1, p2);
}

PiecewiseOperator pw_mul(const PiecewiseOperator& p1, const PiecewiseOperator& p2,
                         const EffectiveDomain& dom) {
  return lift_binary([&dom](const PieceFunction& f, const PieceFunction& g) { return dom.mul(f, g); },
                     p1, p2);
}

PiecewiseOperator pw_neg(const PiecewiseOperator& p, const EffectiveDomain& dom) {
  return lift_unary([&dom](const PieceFunction& f) { return dom.neg(f); }, p);
}

bool structural_equal(const PiecewiseOperator& p, const PiecewiseOperator& q) {
  if (p.pairs().size() != q.pairs().size()) return false;
  for (std::size_t i = 0; i < p.pairs().size(); ++i) {
    const CondPair& a = p.pairs()[i];
    const CondPair& b = q.pairs()[i];
    if (a.right_pt != b.right_pt) return false;
    if (!structural_equal(a.left_fn, b.left_fn)) return false;
    if (!structural_equal(a.pt_fn, b.pt_fn)) return false;
  }
  return structural_equal(p.end_piece().fn, q.end_piece().fn);
}

}  // namespace pwcanon
