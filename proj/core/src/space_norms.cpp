#include "kp2/space_norms.hpp"

#include <cmath>

#include "kp2/modulation.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/projections.hpp"
#include "kp2/propagator.hpp"
#include "kp2/rng.hpp"
#include "kp2/up_bracket.hpp"

namespace kp2 {

namespace {

SampledPath untwist(const SampledPath& p) {
    std::vector<Field2D> vals;
    vals.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        vals.push_back(free_propagate(p.value(i), -p.times()[i]));
    return SampledPath(p.times(), std::move(vals), p.constant_before_first());
}

bool block_is_zero(const SampledPath& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.value(i).l2_norm() != 0.0) return false;
    return true;
}

}  // namespace

SpaceNormBracket dyadic_space_norm_bracket(const SampledPath& path, double s, SpaceKind space,
                                           std::size_t n_dual_samples, std::uint64_t seed) {
    SpaceNormBracket out;
    double lo2 = 0.0, hi2 = 0.0;
    for (const auto& N : resolvable_bands(path.grid())) {
        SampledPath block = project_frequency_band(path, N, BandKind::P_N);
        if (block_is_zero(block)) continue;
        double blo = 0.0, bhi = 0.0;
        if (space == SpaceKind::Y_dot) {
            blo = bhi = p_variation_norm(block, 2.0, /*twist=*/true);
        } else {
            const auto br = up_norm_bracket(untwist(block), 2.0, n_dual_samples,
                                            mix_seed(seed, static_cast<std::uint64_t>(
                                                               N.exponent() + 1024)));
            blo = br.lower;
            bhi = br.upper;
        }
        const double w = std::pow(N.value(), 2.0 * (space == SpaceKind::X ? 0.0 : s));
        lo2 += w * blo * blo;
        hi2 += w * bhi * bhi;
        out.bands.push_back(N);
        out.block_lower.push_back(blo);
        out.block_upper.push_back(bhi);
    }
    out.lower = std::sqrt(lo2);
    out.upper = std::sqrt(hi2);
    if (space == SpaceKind::X) {
        out.xsbq_component = xsbq_seminorm(path, 0.0, 1.0, 1.0);
        out.lower += out.xsbq_component;
        out.upper += out.xsbq_component;
    }
    return out;
}

}  // namespace kp2
