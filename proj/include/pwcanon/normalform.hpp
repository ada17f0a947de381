#pragma once

#include "pwcanon/denest.hpp"
#include "pwcanon/domain.hpp"
#include "pwcanon/piecewise.hpp"
#include "pwcanon/pw_expr.hpp"

namespace pwcanon {

// Canonicalizes every piece (exactly 2n+1 canonicalize calls), then merges
// adjoining triples left to right whenever the left pair's two functions and
// the right pair's region function are structurally equal; a final structural
// test may merge the last pair into the end piece. Extensionally preserving
// and idempotent, but spurious point discontinuities survive.
PiecewiseOperator pseudonormalform(const PiecewiseOperator& p,
                                   const EffectiveDomain& dom = default_domain());

// Denests, canonicalizes every piece, then merges with the evaluation test:
// neighboring region functions must be structurally equal canonical forms and
// the point function must evaluate at the breakpoint to the same value as the
// region function (Undefined matching Undefined). Surviving point pieces with
// a defined value are folded to that constant. Output is canonical: two
// inputs are extensionally equivalent iff their outputs are structurally
// identical (over a strong domain with total evaluation, e.g. polynomials).
PiecewiseOperator canonical_form(const PwExprPtr& e,
                                 const EffectiveDomain& dom = default_domain());
PiecewiseOperator canonical_form(const PiecewiseOperator& p,
                                 const EffectiveDomain& dom = default_domain());

// canonical_form on both sides, compared structurally.
bool equiv_piecewise(const PiecewiseOperator& p, const PiecewiseOperator& q,
                     const EffectiveDomain& dom = default_domain());

}  // namespace pwcanon
