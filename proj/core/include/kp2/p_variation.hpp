#pragma once

#include "kp2/path.hpp"

namespace kp2 {

// Exact V^p norm of a step path: supremum over partitions drawn from the
// sample points plus the two sentinels of the l^p sum of increment norms,
// including the forced terminal jump to v(inf) = 0. Dynamic programming
// over sample indices, O(n^2) increment-norm evaluations.
// With twist set, samples are first conjugated by e^{-tS} (the V^p_S norm).
double p_variation_norm(const SampledPath& v, double p, bool twist = false);

}  // namespace kp2
