#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pwcanon/breakpoints.hpp"
#include "pwcanon/domain.hpp"
#include "pwcanon/expr.hpp"

namespace pwcanon {

// One breakpoint with the function on the open region to its left and the
// function at the point itself.
struct CondPair {
  PieceFunction left_fn;
  PieceFunction pt_fn;
  Breakpoint right_pt;
};

// Function on the final unbounded open region.
struct EndPiece {
  PieceFunction fn;
};

// n strictly ordered breakpoints carrying 2n+1 piece functions: the record
// layout makes the alternation open region / point / ... / open region hold
// by construction.
class PiecewiseOperator {
 public:
  PiecewiseOperator(std::vector<CondPair> pairs, EndPiece end);

  const std::vector<CondPair>& pairs() const noexcept { return pairs_; }
  const EndPiece& end_piece() const noexcept { return end_; }

  std::size_t breakpoint_count() const noexcept { return pairs_.size(); }
  std::size_t piece_count() const noexcept { return 2 * pairs_.size() + 1; }

  // Pieces in display order: piece(2i) left of breakpoint i, piece(2i+1) at
  // it, piece(2n) the end piece.
  const PieceFunction& piece(std::size_t i) const;

  BreakpointSet breakpoints() const;

 private:
  std::vector<CondPair> pairs_;
  EndPiece end_;
};

// Builds from 2n+1 functions in display order; throws ArityMismatch or
// UnsortedBreakpoints.
PiecewiseOperator make(const BreakpointSet& breakpoints, std::vector<PieceFunction> funcs);

// Either the i-th open region (0..n, counting from the left) or the i-th
// breakpoint (0..n-1).
struct RegionLocator {
  enum class Kind { OpenRegion, AtBreakpoint };

  Kind kind = Kind::OpenRegion;
  std::size_t index = 0;

  static RegionLocator open_region(std::size_t i) { return {Kind::OpenRegion, i}; }
  static RegionLocator at_breakpoint(std::size_t i) { return {Kind::AtBreakpoint, i}; }

  friend bool operator==(const RegionLocator&, const RegionLocator&) = default;
};

// Locates the range-partition element containing lambda by binary search,
// using at most floor(log2 n) + 1 three-way comparisons.
RegionLocator chi(const PiecewiseOperator& p, const Breakpoint& lambda);

const PieceFunction& select(const PiecewiseOperator& p, const RegionLocator& where);

// The argument is used twice: once to select the piece, once as its input.
Value evaluate(const PiecewiseOperator& p, const Breakpoint& lambda,
               const EffectiveDomain& dom = default_domain());

// Exact refinement: breakpoints become a union B(p), new points split their
// region into two copies of the same function. Pieces are shared structurally,
// never evaluated.
PiecewiseOperator refine(const PiecewiseOperator& p, const BreakpointSet& a);

using UnaryPieceFn = std::function<PieceFunction(const PieceFunction&)>;
using BinaryPieceFn = std::function<PieceFunction(const PieceFunction&, const PieceFunction&)>;

// Same breakpoints, psi applied to every piece.
PiecewiseOperator lift_unary(const UnaryPieceFn& psi, const PiecewiseOperator& p);

// Refines both operands to the breakpoint union, then applies psi
// componentwise; linear in the union size.
PiecewiseOperator lift_binary(const BinaryPieceFn& psi, const PiecewiseOperator& p1,
                              const PiecewiseOperator& p2);

PiecewiseOperator pw_add(const PiecewiseOperator& p1, const PiecewiseOperator& p2,
                         const EffectiveDomain& dom = default_domain());
PiecewiseOperator pw_sub(const PiecewiseOperator& p1, const PiecewiseOperator& p2,
                         const EffectiveDomain& dom = default_domain());
PiecewiseOperator pw_mul(const PiecewiseOperator& p1, const PiecewiseOperator& p2,
                         const EffectiveDomain& dom = default_domain());
PiecewiseOperator pw_neg(const PiecewiseOperator& p,
                         const EffectiveDomain& dom = default_domain());

bool structural_equal(const PiecewiseOperator& p, const PiecewiseOperator& q);

}  // namespace pwcanon
