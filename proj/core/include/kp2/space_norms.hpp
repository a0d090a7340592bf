#pragma once

#include <cstdint>
#include <vector>

#include "kp2/cutoffs.hpp"
#include "kp2/path.hpp"

namespace kp2 {

// Dyadically weighted solution-space norms over resolvable xi bands:
//   Y_dot: per-block V^2_S norms (exact),
//   Z_dot: per-block U^2_S brackets,
//   X:     Z_dot at s = 0 plus the X^{0,1,1} seminorm,
// aggregated as (sum_N N^{2s} block^2)^{1/2}. Exact blocks collapse the
// bracket (lower == upper); U^2 blocks keep it two-sided.
enum class SpaceKind { Y_dot, Z_dot, X };

struct SpaceNormBracket {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<DyadicIndex> bands;
    std::vector<double> block_lower;
    std::vector<double> block_upper;
    double xsbq_component = 0.0;  // only for SpaceKind::X
};

SpaceNormBracket dyadic_space_norm_bracket(const SampledPath& path, double s, SpaceKind space,
                                           std::size_t n_dual_samples = 16,
                                           std::uint64_t seed = 0x5eedULL);

}  // namespace kp2
