#include "kp2/duhamel.hpp"

#include <cmath>
#include <stdexcept>

#include "kp2/parallel.hpp"
#include "kp2/propagator.hpp"

namespace kp2 {

SampledPath duhamel_integral(const SampledPath& u1, const SampledPath& u2, double T,
                             Quadrature quad, const std::vector<double>* weights) {
    if (!u1.grid().compatible(u2.grid()))
        throw std::invalid_argument("duhamel_integral: mismatched grids");
    if (u1.times() != u2.times())
        throw std::invalid_argument("duhamel_integral: node mismatch");
    double dt = 0.0;
    if (!u1.uniform_times(&dt))
        throw std::invalid_argument("duhamel_integral: nodes must be uniform");
    if (u1.times().front() != 0.0)
        throw std::invalid_argument("duhamel_integral: nodes must start at t = 0");
    if (weights && weights->size() != u1.size())
        throw std::invalid_argument("duhamel_integral: weight count mismatch");
    for (std::size_t j = 0; j < u1.size(); ++j)
        if (!u1.value(j).real_flag() || !u2.value(j).real_flag())
            throw std::invalid_argument("duhamel_integral: inputs must be real fields");

    const std::size_t n = u1.size();
    const auto& times = u1.times();
    const auto& grid = u1.grid();

    // Twisted integrand G(t') = e^{-t'S} d/dx(u1 u2)(t'), cut at T.
    std::vector<Field2D> G(n, Field2D::zero(grid, false));
    parallel_for(n, [&](std::size_t j) {
        const double t = times[j];
        double w = t <= T ? 1.0 : 0.0;
        if (weights) w *= (*weights)[j];
        if (w == 0.0) return;
        Field2D f = d_dx(dealiased_product(u1.value(j), u2.value(j)));
        if (w != 1.0) f *= cplx{w, 0.0};
        G[j] = free_propagate(f, -t);
    });

    // Cumulative quadrature H_m = int_0^{t_m} G.
    std::vector<Field2D> H;
    H.reserve(n);
    H.push_back(Field2D::zero(grid, false));
    if (quad == Quadrature::trapezoid || n == 2) {
        for (std::size_t m = 1; m < n; ++m) {
            Field2D inc = G[m - 1] + G[m];
            inc *= cplx{0.5 * dt, 0.0};
            H.push_back(H.back() + inc);
        }
    } else {
        // Parabolic (cumulative Simpson) prefix integrals: over each node
        // step, integrate the quadratic through three neighbouring nodes.
        const double c = dt / 12.0;
        for (std::size_t m = 1; m < n; ++m) {
            Field2D inc = Field2D::zero(grid, false);
            if (m % 2 == 1 && m + 1 < n) {
                // left half of the pair [t_{m-1}, t_{m+1}]
                inc += G[m - 1] * cplx{5.0 * c, 0.0};
                inc += G[m] * cplx{8.0 * c, 0.0};
                inc -= G[m + 1] * cplx{c, 0.0};
            } else {
                // right half of the pair [t_{m-2}, t_m]
                inc -= G[m - 2] * cplx{c, 0.0};
                inc += G[m - 1] * cplx{8.0 * c, 0.0};
                inc += G[m] * cplx{5.0 * c, 0.0};
            }
            H.push_back(H.back() + inc);
        }
    }

    // Retwist: output(t_m) = e^{t_m S} H_m.
    std::vector<Field2D> out(n, Field2D::zero(grid, true));
    parallel_for(n, [&](std::size_t m) {
        Field2D f = free_propagate(H[m], times[m]);
        f.set_real_flag(true);  // real by symmetry of the construction
        out[m] = std::move(f);
    });
    return SampledPath(times, std::move(out));
}

}  // namespace kp2
