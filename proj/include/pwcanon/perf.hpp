#pragma once

#include <cstdint>

namespace pwcanon::perf {

// Operation counters backing the complexity claims. canonicalize_calls is
// bumped on every EffectiveDomain::canonicalize entry, order_comparisons on
// every three-way breakpoint comparison. Thread-local so concurrent callers
// never interleave counts.
struct Counters {
  std::uint64_t canonicalize_calls = 0;
  std::uint64_t order_comparisons = 0;
};

Counters& counters() noexcept;
void reset() noexcept;

}  // namespace pwcanon::perf
