#include "pwcanon/breakpoints.hpp"

#include <algorithm>
#include <utility>

#include "pwcanon/errors.hpp"

namespace pwcanon {

BreakpointSet::BreakpointSet(std::vector<Breakpoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (compare(points_[i], points_[i + 1]) != Ordering::Less)
      throw UnsortedBreakpoints("breakpoints must be strictly increasing");
  }
}

BreakpointSet BreakpointSet::from_unsorted(std::vector<Breakpoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return BreakpointSet(std::move(points));
}

BreakpointSet merge_breakpoints(const BreakpointSet& a, const BreakpointSet& b) {
  std::vector<Breakpoint> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    switch (compare(a[i], b[j])) {
      case Ordering::Less:
        out.push_back(a[i++]);
        break;
      case Ordering::Greater:
        out.push_back(b[j++]);
        break;
      case Ordering::Equal:
        out.push_back(a[i++]);
        ++j;
        break;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return BreakpointSet(std::move(out));
}

}  // namespace pwcanon
