#include "kp2/greedy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kp2/p_variation.hpp"

namespace kp2 {

namespace {

double dist(const Field2D& a, const Field2D& b) {
    double s = 0.0;
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
    return std::sqrt(s);
}

}  // namespace

std::vector<DecompositionLevel> greedy_decompose(const SampledPath& v, double p, int n_max,
                                                 bool stop_when_exhausted) {
    if (!(p >= 1.0)) throw std::invalid_argument("greedy_decompose: p must be >= 1");
    const double vnorm = p_variation_norm(v, p);
    if (vnorm == 0.0) throw std::invalid_argument("greedy_decompose: zero path");

    const std::size_t n = v.size();
    const auto& times = v.times();
    const Field2D minus_inf_value = v.value_at_neg_inf();
    const Field2D zero = Field2D::zero(v.grid(), v.value(0).real_flag());

    // Value of v at a scan position: index -1 is the -inf sentinel.
    auto v_at = [&](long i) -> const Field2D& {
        return i < 0 ? minus_inf_value : v.value(static_cast<std::size_t>(i));
    };

    std::vector<DecompositionLevel> levels;
    levels.reserve(static_cast<std::size_t>(n_max) + 1);

    DecompositionLevel l0{0,
                          Partition::class_z({}),
                          StepAtom{},
                          SampledPath(times, std::vector<Field2D>(n, zero)),
                          v,
                          2,
                          0.0,
                          v.sup_norm()};
    levels.push_back(std::move(l0));

    // Partition tracked as sorted sample indices (sentinels implicit).
    std::vector<long> part_idx;  // indices into v's samples

    for (int lvl = 1; lvl <= n_max; ++lvl) {
        const double threshold = std::ldexp(vnorm, -lvl);  // 2^{-lvl} ||v||_{V^p}

        // Stopping-time scan of the original path inside each interval.
        std::vector<long> next_idx;
        long anchor = -1;  // -inf
        std::size_t pi = 0;
        for (long i = 0; i < static_cast<long>(n); ++i) {
            const bool is_partition_point =
                pi < part_idx.size() && part_idx[pi] == i;
            if (is_partition_point) {
                next_idx.push_back(i);
                anchor = i;
                ++pi;
                continue;
            }
            if (dist(v_at(i), v_at(anchor)) > threshold) {
                next_idx.push_back(i);
                anchor = i;
            }
        }
        part_idx = next_idx;

        // u_lvl: plateau value v_{lvl-1}(left endpoint) on each interval.
        const SampledPath& prev_resid = levels.back().residual;
        StepAtom step;
        step.jump_times.reserve(part_idx.size());
        step.values.reserve(part_idx.size());
        for (long idx : part_idx) {
            step.jump_times.push_back(times[static_cast<std::size_t>(idx)]);
            step.values.push_back(prev_resid.value(static_cast<std::size_t>(idx)));
        }

        // Evaluate u_lvl on the sample grid and subtract.
        std::vector<Field2D> ug;
        ug.reserve(n);
        std::size_t k = 0;
        Field2D current = zero;  // v_{lvl-1}(-inf) = 0
        for (std::size_t i = 0; i < n; ++i) {
            while (k < part_idx.size() && static_cast<long>(i) >= part_idx[k]) {
                current = step.values[k];
                ++k;
            }
            ug.push_back(current);
        }
        SampledPath step_on_grid(times, std::move(ug));
        SampledPath resid = prev_resid;
        resid -= step_on_grid;

        std::vector<double> ptimes;
        for (long idx : part_idx) ptimes.push_back(times[static_cast<std::size_t>(idx)]);

        DecompositionLevel L{lvl,
                             Partition::class_z(ptimes),
                             std::move(step),
                             std::move(step_on_grid),
                             std::move(resid),
                             ptimes.size() + 2,
                             0.0,
                             0.0};
        for (const auto& val : L.step.values) L.sup_step = std::max(L.sup_step, val.l2_norm());
        L.sup_residual = L.residual.sup_norm();
        levels.push_back(std::move(L));

        if (stop_when_exhausted && levels.back().sup_residual == 0.0) break;
    }
    return levels;
}

}  // namespace kp2
