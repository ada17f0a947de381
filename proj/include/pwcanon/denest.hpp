#pragma once

#include "pwcanon/domain.hpp"
#include "pwcanon/piecewise.hpp"
#include "pwcanon/pw_expr.hpp"

namespace pwcanon {

// Flattens definitional nesting into one operator. Nested breakpoints survive
// only strictly inside their host region (set-theoretic intersection; a
// breakpoint equal to the host boundary is governed by the host's own
// breakpoint). A nested operator in point position collapses to its piece at
// that point, selected structurally, never evaluated. Arithmetic nodes are
// resolved through the lifted operations of dom. The flat operator never has
// more breakpoints than the nest contained in total.
PiecewiseOperator denest(const PwExprPtr& e, const EffectiveDomain& dom = default_domain());

}  // namespace pwcanon
