#pragma once

#include <cstddef>

#include "pwcanon/breakpoints.hpp"
#include "pwcanon/piecewise.hpp"

namespace pwcanon {

// Deterministic probe set for an evaluation-based equivalence check: every
// breakpoint, the midpoint of each consecutive breakpoint pair, per_region
// evenly spaced rationals strictly inside each bounded region, and per_region
// unit-spaced points beyond each extreme breakpoint.
struct SamplePlan {
  BreakpointSet points;
  std::size_t per_region = 1;
};

// per_region is degree_bound + 1, enough agreements per open region to force
// identity of polynomials within the bound. Throws std::invalid_argument on a
// negative bound.
SamplePlan sample_points(const BreakpointSet& bs, int degree_bound);

// Decides extensional equivalence by brute evaluation on the plan for the
// merged breakpoint sets: values (including Undefined) must coincide at every
// probe. Selection is a linear scan and evaluation a plain tree walk, fully
// independent of canonicalization. Exact for polynomial pieces within
// degree_bound; throws DegreeBoundExceeded when a polynomial piece is too
// large, and degrades to a counterexample finder for pieces containing
// division.
bool extensional_equiv_oracle(const PiecewiseOperator& p, const PiecewiseOperator& q,
                              int degree_bound);

}  // namespace pwcanon
