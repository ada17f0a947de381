#include "pwcanon/perf.hpp"

namespace pwcanon::perf {

Counters& counters() noexcept {
  thread_local Counters c;
  return c;
}

void reset() noexcept { counters() = Counters{}; }

}  // namespace pwcanon::perf
