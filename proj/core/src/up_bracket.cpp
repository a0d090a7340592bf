#include "kp2/up_bracket.hpp"

#include <cmath>
#include <stdexcept>

#include "kp2/bilinear.hpp"
#include "kp2/greedy.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/rng.hpp"

namespace kp2 {

UpBracket up_norm_bracket(const SampledPath& u, double p, std::size_t n_dual_samples,
                          std::uint64_t seed) {
    if (!(p > 1.0)) throw std::invalid_argument("up_norm_bracket: requires p > 1");
    UpBracket out;

    bool all_zero = true;
    for (std::size_t i = 0; i < u.size() && all_zero; ++i)
        if (u.value(i).l2_norm() != 0.0) all_zero = false;
    if (all_zero) return out;

    // Dual lower bound.
    const double p_dual = p / (p - 1.0);
    const double t_lo = u.times().front() - 0.25;
    const double t_hi = u.times().back() + 0.25;
    for (std::size_t trial = 0; trial < n_dual_samples; ++trial) {
        const std::uint64_t s = mix_seed(seed, trial);
        const std::size_t jumps = 2 + s % 7;
        SampledPath v = sample_step_path(u.grid(), jumps, s, t_lo, t_hi);
        const double vn = p_variation_norm(v, p_dual);
        if (vn == 0.0) continue;
        out.lower = std::max(out.lower, std::abs(bilinear_exact(u, v)) / vn);
    }

    // Constructive upper bound.
    const double p_dec = std::max(1.0, p / 2.0);
    out.v_dec_norm = p_variation_norm(u, p_dec);
    const int max_levels = 64;
    const auto levels = greedy_decompose(u, p_dec, max_levels, /*stop_when_exhausted=*/true);
    const double alpha = p_dec / p - 1.0;  // < 0
    for (const auto& L : levels) {
        if (L.level == 0 || L.sup_step == 0.0) continue;
        out.upper += 4.0 * std::pow(2.0, static_cast<double>(L.level) * alpha) * out.v_dec_norm;
        out.measured_cost_sum += L.step.lp_cost(p);
        out.levels_used = L.level;
    }
    if (levels.back().sup_residual > 0.0) {
        // Never expected on a finite sample set; charge the analytic tail.
        const double r = std::pow(2.0, alpha);
        out.upper += 4.0 * out.v_dec_norm * std::pow(r, max_levels + 1) / (1.0 - r);
    }
    return out;
}

}  // namespace kp2
