#pragma once

#include <cstdint>

#include "kp2/path.hpp"

namespace kp2 {

// Two-sided certificate for the atomic-space norm ||u||_{U^p}, which is an
// infimum over atomic decompositions and not finitely computable.
//   lower: duality side, max over seeded random V^{p'} step paths v of
//          |B(u,v)| / ||v||_{V^{p'}}  (exact B on step paths).
//   upper: constructive side via the greedy decomposition of u at
//          parameter p/2 (clamped to >= 1), charging each nonzero level
//          its proof cost 4 * 2^{n(p_dec/p - 1)} ||u||_{V^{p_dec}}.
struct UpBracket {
    double lower = 0.0;
    double upper = 0.0;
    double v_dec_norm = 0.0;        // ||u||_{V^{p_dec}} behind the upper bound
    double measured_cost_sum = 0.0; // sum of actual level l^p costs (diagnostic)
    int levels_used = 0;
};

UpBracket up_norm_bracket(const SampledPath& u, double p, std::size_t n_dual_samples = 32,
                          std::uint64_t seed = 0x5eedULL);

}  // namespace kp2
