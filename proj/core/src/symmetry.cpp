#include "kp2/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "kp2/projections.hpp"
#include "kp2/sobolev.hpp"

namespace kp2 {

Field2D apply_scaling(const Field2D& u, double lambda) {
    if (lambda == 1.0) return u;
    DyadicIndex::from_value(lambda);  // validates power of two
    const auto& g = u.grid();
    FrequencyGrid scaled(g.nx(), g.ny(), g.Lx() / lambda, g.Ly() / (lambda * lambda));
    std::vector<cplx> c = u.coeffs();
    const double amp = std::sqrt(lambda);
    for (auto& z : c) z *= amp;
    return Field2D(std::move(scaled), std::move(c), u.real_flag());
}

SampledPath apply_scaling(const SampledPath& path, double lambda) {
    const double tscale = 1.0 / (lambda * lambda * lambda);
    std::vector<double> times;
    std::vector<Field2D> vals;
    times.reserve(path.size());
    vals.reserve(path.size());
    for (std::size_t j = 0; j < path.size(); ++j) {
        times.push_back(path.times()[j] * tscale);
        vals.push_back(apply_scaling(path.value(j), lambda));
    }
    return SampledPath(std::move(times), std::move(vals), path.constant_before_first());
}

namespace {

long galilean_step(const FrequencyGrid& g, double c, long jx) {
    // eta shift of column jx in index units: c*xi/d_eta = c*jx*Ly/Lx.
    const double raw = c * static_cast<double>(jx) * g.Ly() / g.Lx();
    const double rounded = std::round(raw);
    if (std::fabs(raw - rounded) > 1e-9 * std::max(1.0, std::fabs(raw)))
        throw std::invalid_argument("apply_galilean: c is not grid-exact (c*Ly/Lx not integer)");
    return static_cast<long>(rounded);
}

}  // namespace

Field2D apply_galilean(const Field2D& u, double c, double t) {
    if (c == 0.0) return u;
    const auto& g = u.grid();
    Field2D out = Field2D::zero(g, u.real_flag());
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const long jx = g.mode_x(ix);
        const long shift = galilean_step(g, c, jx);
        const double xi = g.xi(ix);
        for (std::size_t iy = 0; iy < g.ny(); ++iy) {
            const cplx v = u.at(ix, iy);
            if (v == cplx{0.0, 0.0}) continue;
            const double eta = g.eta(iy);
            // target frequency (xi, eta - c xi); phase from the t-shifts
            const double phase = t * (2.0 * c * eta - c * c * xi);
            const std::size_t dst = g.index_of(jx, g.mode_y(iy) - shift);
            out.coeffs()[dst] = v * cplx{std::cos(phase), std::sin(phase)};
        }
    }
    return out;
}

SampledPath apply_galilean(const SampledPath& path, double c) {
    std::vector<Field2D> vals;
    vals.reserve(path.size());
    for (std::size_t j = 0; j < path.size(); ++j)
        vals.push_back(apply_galilean(path.value(j), c, path.times()[j]));
    return SampledPath(path.times(), std::move(vals), path.constant_before_first());
}

Field2D apply_x_reflection(const Field2D& u) {
    const auto& g = u.grid();
    Field2D out = Field2D::zero(g, u.real_flag());
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const long jx = g.mode_x(ix);
        for (std::size_t iy = 0; iy < g.ny(); ++iy)
            out.coeffs()[g.index_of(-jx, g.mode_y(iy))] = u.at(ix, iy);
    }
    return out;
}

SampledPath apply_time_reversal(const SampledPath& path) {
    const double t0 = path.times().front();
    const double t1 = path.times().back();
    std::vector<double> times;
    std::vector<Field2D> vals;
    const std::size_t n = path.size();
    times.reserve(n);
    vals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        times.push_back(t0 + (t1 - path.times()[n - 1 - j]));
        vals.push_back(apply_x_reflection(path.value(n - 1 - j)));
    }
    return SampledPath(std::move(times), std::move(vals));
}

RescaleResult rescale_to_small_data(const Field2D& u0, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("rescale_to_small_data: delta must be > 0");
    const auto bands = resolvable_bands(u0.grid());

    // Smallest dyadic split with a small-critical-norm high part.
    int split = bands.back().exponent() + 1;
    for (const auto& N : bands) {
        Field2D high = project_frequency_band(u0, N, BandKind::P_at_or_above);
        if (sobolev_norm(high, -0.5, 0.0, true) < delta) {
            split = N.exponent();
            break;
        }
    }

    Field2D low = project_frequency_band(u0, DyadicIndex(split), BandKind::P_below);
    const double R = low.l2_norm();

    RescaleResult out{1.0, u0, 0.0, R, split};
    if (R > delta) {
        const double target = (delta / R) * (delta / R);
        out.lambda = std::ldexp(1.0, static_cast<int>(std::floor(std::log2(target))));
        out.data = apply_scaling(u0, out.lambda);
    }
    const double ratio = delta / std::max(R, 1e-300);
    out.T_local = std::pow(ratio, 6.0);
    return out;
}

}  // namespace kp2
