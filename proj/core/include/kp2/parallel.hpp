#pragma once

#include <cstddef>
#include <functional>

namespace kp2 {

// Runs fn(i) for i in [0, n) across worker threads. Callers write to
// disjoint preallocated slots, so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace kp2
