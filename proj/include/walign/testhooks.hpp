#ifndef WALIGN_TESTHOOKS_HPP
#define WALIGN_TESTHOOKS_HPP

#include <atomic>

namespace walign::testhooks {

// Deliberate fault injection for the verify harness. Production code paths
// only read this; it stays None outside mutation runs.
enum class Mutation { None, LehmerCode, DividedDifference, BruhatLeq };

inline std::atomic<Mutation> active{Mutation::None};

inline bool mutated(Mutation m) {
  return active.load(std::memory_order_relaxed) == m;
}

}  // namespace walign::testhooks

#endif
