#pragma once

#include <cstddef>
#include <vector>

#include "pwcanon/rational.hpp"

namespace pwcanon {

// Strictly increasing finite set of breakpoints; the generating set of a
// range partition.
class BreakpointSet {
 public:
  BreakpointSet() = default;

  // Throws UnsortedBreakpoints unless strictly increasing.
  explicit BreakpointSet(std::vector<Breakpoint> points);

  // Sorts and removes duplicates first.
  static BreakpointSet from_unsorted(std::vector<Breakpoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Breakpoint& operator[](std::size_t i) const { return points_[i]; }
  const Breakpoint& front() const { return points_.front(); }
  const Breakpoint& back() const { return points_.back(); }
  const std::vector<Breakpoint>& points() const noexcept { return points_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const BreakpointSet&, const BreakpointSet&) = default;

 private:
  std::vector<Breakpoint> points_;
};

// Sorted union by one linear pass; cost O(|a| + |b|).
BreakpointSet merge_breakpoints(const BreakpointSet& a, const BreakpointSet& b);

}  // namespace pwcanon
