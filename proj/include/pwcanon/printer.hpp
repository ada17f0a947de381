#pragma once

#include <string>

#include "pwcanon/domain.hpp"
#include "pwcanon/piecewise.hpp"
#include "pwcanon/value.hpp"

namespace pwcanon {

// Deterministic rendering in the surface grammar, minimally parenthesized.
// Reduced rational-function pieces render as (num)/(den), which lies outside
// the parseable language; everything reachable from parsed input round-trips.
std::string print(const PieceFunction& f);

// "undef" for the undefined value.
std::string print(const Value& v);

// The customary display: region branches as 'x < b', point branches as
// 'x = b' showing the evaluated value at b, final region as 'otherwise'.
// A single-piece operator prints as a bare expression.
std::string print(const PiecewiseOperator& p, const EffectiveDomain& dom = default_domain());

// Machine-readable listing: a JSON object with the breakpoints and all 2n+1
// piece strings in display order.
std::string json_form(const PiecewiseOperator& p);

}  // namespace pwcanon
