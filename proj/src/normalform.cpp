#include "pwcanon/normalform.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace pwcanon {

namespace {

// Shared compaction: canonicalize all 2n+1 pieces (exactly 2n+1 domain
// calls), then sweep left to right. A pair merges into its successor when the
// breakpoint between them is invisible; the merged pair keeps the left
// region, the right point and the right breakpoint, so a run of mergeable
// pairs collapses in one pass. A final check may absorb the last pair into
// the end piece. No cascade is lost there: if dropping the last pair exposed
// another mergeable boundary, that boundary would already have merged during
// the sweep.
PiecewiseOperator merge_pass(const PiecewiseOperator& p, const EffectiveDomain& dom,
                             bool evaluation_merge) {
  std::vector<CondPair> pairs;
  pairs.reserve(p.breakpoint_count());
  for (const CondPair& c : p.pairs())
    pairs.push_back({dom.canonicalize(c.left_fn), dom.canonicalize(c.pt_fn), c.right_pt});
  PieceFunction end = dom.canonicalize(p.end_piece().fn);

  // Is the breakpoint a.right_pt invisible between pair a and the region
  // function immediately to its right? Structurally: all three pieces
  // identical. With evaluation: the two regions are identical canonical forms
  // and the point piece takes the same value there (Undefined matching
  // Undefined), which also erases spurious discontinuities.
  auto invisible = [&](const CondPair& a, const PieceFunction& right_region) {
    if (!evaluation_merge)
      return structural_equal(a.left_fn, a.pt_fn) && structural_equal(a.pt_fn, right_region);
    return structural_equal(a.left_fn, right_region) &&
           dom.eval_at(a.pt_fn, a.right_pt) == dom.eval_at(a.left_fn, a.right_pt);
  };

  std::vector<CondPair> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!out.empty() && invisible(out.back(), pairs[i].left_fn)) {
      out.back().pt_fn = pairs[i].pt_fn;
      out.back().right_pt = pairs[i].right_pt;
    } else {
      out.push_back(pairs[i]);
    }
  }
  if (!out.empty() && invisible(out.back(), end)) out.pop_back();

  return PiecewiseOperator(std::move(out), EndPiece{std::move(end)});
}

// Replace each surviving point piece carrying a defined value by the
// canonical constant of that value, so agreement at a point is visible as
// structural identity. Undefined points keep their canonical representative.
PiecewiseOperator fold_points(const PiecewiseOperator& p, const EffectiveDomain& dom) {
  std::vector<CondPair> pairs = p.pairs();
  for (CondPair& c : pairs) {
    Value v = dom.eval_at(c.pt_fn, c.right_pt);
    if (v.is_defined()) c.pt_fn = dom.constant(v.get());
  }
  return PiecewiseOperator(std::move(pairs), p.end_piece());
}

}  // namespace

PiecewiseOperator pseudonormalform(const PiecewiseOperator& p, const EffectiveDomain& dom) {
  return merge_pass(p, dom, /*evaluation_merge=*/false);
}

PiecewiseOperator canonical_form(const PwExprPtr& e, const EffectiveDomain& dom) {
  return fold_points(merge_pass(denest(e, dom), dom, /*evaluation_merge=*/true), dom);
}

PiecewiseOperator canonical_form(const PiecewiseOperator& p, const EffectiveDomain& dom) {
  return canonical_form(pw_wrap(p), dom);
}

bool equiv_piecewise(const PiecewiseOperator& p, const PiecewiseOperator& q,
                     const EffectiveDomain& dom) {
  return structural_equal(canonical_form(p, dom), canonical_form(q, dom));
}

}  // namespace pwcanon
