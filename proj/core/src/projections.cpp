#include "kp2/projections.hpp"

#include <numbers>
#include <stdexcept>

#include "kp2/path.hpp"

namespace kp2 {

double band_multiplier(BandKind kind, double xi, double N) {
    switch (kind) {
        case BandKind::P_N:
            return CutoffFamily::psi(xi / N);
        case BandKind::P_0:
            return CutoffFamily::chi(2.0 * xi);
        case BandKind::P_below:
            return CutoffFamily::chi(2.0 * xi / N);
        case BandKind::P_at_or_above:
            return 1.0 - CutoffFamily::chi(2.0 * xi / N);
    }
    throw std::logic_error("band_multiplier: unknown kind");
}

Field2D project_frequency_band(const Field2D& u, DyadicIndex N, BandKind kind) {
    Field2D out = u;
    const auto& g = u.grid();
    const double Nv = N.value();
    const std::size_t ny = g.ny();
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const double m = band_multiplier(kind, g.xi(ix), Nv);
        if (m == 1.0) continue;
        for (std::size_t iy = 0; iy < ny; ++iy) out.coeffs()[ix * ny + iy] *= m;
    }
    // The multiplier is even in xi, so Hermitian symmetry survives.
    out.set_real_flag(u.real_flag());
    return out;
}

SampledPath project_frequency_band(const SampledPath& u, DyadicIndex N, BandKind kind) {
    std::vector<Field2D> vals;
    vals.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        vals.push_back(project_frequency_band(u.value(i), N, kind));
    return SampledPath(u.times(), std::move(vals), u.constant_before_first());
}

std::vector<DyadicIndex> resolvable_bands(const FrequencyGrid& grid) {
    const double lo = 2.0 * std::numbers::pi / grid.Lx();
    const double hi = lo * static_cast<double>(grid.nx() / 2);
    return CutoffFamily::blocks_meeting(lo, hi);
}

}  // namespace kp2
