#include "kp2/random_fields.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "kp2/rng.hpp"
#include "kp2/sobolev.hpp"

namespace kp2 {

namespace {

Field2D fill_band(const FrequencyGrid& grid, double lo, double hi, std::uint64_t seed,
                  bool real_field, const char* who) {
    GaussianStream rng(seed);
    Field2D f = Field2D::zero(grid, real_field);
    std::size_t populated = 0;
    const std::size_t ny = grid.ny();
    for (std::size_t ix = 1; ix < grid.nx(); ++ix) {  // skip the xi=0 column
        const double axi = std::fabs(grid.xi(ix));
        const bool in_band = axi >= lo && axi <= hi;
        for (std::size_t iy = 0; iy < ny; ++iy) {
            // Draw unconditionally so the stream layout does not depend
            // on the band (replays stay aligned).
            const double re = rng.normal();
            const double im = rng.normal();
            if (in_band) {
                f.coeffs()[ix * ny + iy] = cplx{re, im};
                ++populated;
            }
        }
    }
    if (populated == 0) throw std::invalid_argument(std::string(who) + ": band not resolvable");
    if (real_field) f.hermitian_symmetrize();
    f.zero_x_mean();
    const double n = f.l2_norm();
    f *= cplx{1.0 / n, 0.0};
    return f;
}

}  // namespace

Field2D sample_band_limited_field(const FrequencyGrid& grid, std::optional<DyadicIndex> band,
                                  std::uint64_t seed, bool real_field) {
    if (band) {
        const double N = band->value();
        return fill_band(grid, 0.95 * N, 1.1 * N, seed, real_field, "sample_band_limited_field");
    }
    const double hi = grid.dealias_limit_x();
    return fill_band(grid, 0.0, hi, seed, real_field, "sample_band_limited_field");
}

Field2D sample_annulus_field(const FrequencyGrid& grid, DyadicIndex band, std::uint64_t seed,
                             bool real_field) {
    const double N = band.value();
    const double hi = std::min(2.0 * N, grid.dealias_limit_x());
    return fill_band(grid, 0.5 * N, hi, seed, real_field, "sample_annulus_field");
}

Field2D sample_gaussian_data(const FrequencyGrid& grid, std::uint64_t seed,
                             double target_critical_norm, double sigma_x, double sigma_y) {
    if (sigma_y <= 0.0) sigma_y = sigma_x;
    GaussianStream rng(seed);
    Field2D f = Field2D::zero(grid, true);
    const std::size_t ny = grid.ny();
    const double sx2 = 2.0 * sigma_x * sigma_x;
    const double sy2 = 2.0 * sigma_y * sigma_y;
    for (std::size_t ix = 1; ix < grid.nx(); ++ix) {
        const double xi = grid.xi(ix);
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double eta = grid.eta(iy);
            const double env = std::exp(-xi * xi / sx2 - eta * eta / sy2);
            f.coeffs()[ix * ny + iy] = cplx{rng.normal(), rng.normal()} * env;
        }
    }
    f.hermitian_symmetrize();
    f.zero_x_mean();
    f.apply_dealias();
    const double n = sobolev_norm(f, -0.5, 0.0, true);
    if (n == 0.0) throw std::runtime_error("sample_gaussian_data: degenerate draw");
    if (target_critical_norm > 0.0) f *= cplx{target_critical_norm / n, 0.0};
    return f;
}

namespace {

std::vector<double> random_times(GaussianStream& rng, std::size_t count, double t_lo,
                                 double t_hi) {
    std::set<double> uniq;
    while (uniq.size() < count)
        uniq.insert(t_lo + (t_hi - t_lo) * rng.uniform());
    return {uniq.begin(), uniq.end()};
}

}  // namespace

StepAtom sample_step_atom(const FrequencyGrid& grid, std::size_t jump_count, double p,
                          std::uint64_t seed, double t_lo, double t_hi, bool twisted) {
    if (jump_count == 0) throw std::invalid_argument("sample_step_atom: need at least one jump");
    GaussianStream rng(seed);
    StepAtom atom;
    atom.twisted = twisted;
    atom.jump_times = random_times(rng, jump_count, t_lo, t_hi);
    double cost = 0.0;
    for (std::size_t k = 0; k < jump_count; ++k) {
        Field2D f = sample_band_limited_field(grid, std::nullopt, mix_seed(seed, k + 1));
        cost += std::pow(f.l2_norm(), p);  // = 1 per draw, kept for clarity
        atom.values.push_back(std::move(f));
    }
    const double scale = 1.0 / std::pow(cost, 1.0 / p);
    for (auto& v : atom.values) v *= cplx{scale, 0.0};
    return atom;
}

SampledPath sample_step_path(const FrequencyGrid& grid, std::size_t jump_count,
                             std::uint64_t seed, double t_lo, double t_hi) {
    GaussianStream rng(seed);
    auto times = random_times(rng, jump_count, t_lo, t_hi);
    std::vector<Field2D> vals;
    Field2D acc = Field2D::zero(grid, false);
    for (std::size_t k = 0; k < jump_count; ++k) {
        Field2D jump = sample_band_limited_field(grid, std::nullopt, mix_seed(seed, k + 101));
        jump *= cplx{0.5 + rng.uniform(), 0.0};
        acc += jump;
        vals.push_back(acc);
    }
    return SampledPath(std::move(times), std::move(vals));
}

}  // namespace kp2
