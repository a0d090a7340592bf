#include "kp2/frequency_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kp2 {

FrequencyGrid::FrequencyGrid(std::size_t nx, std::size_t ny, double Lx, double Ly)
    : nx_(nx), ny_(ny), Lx_(Lx), Ly_(Ly) {
    if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0)
        throw std::invalid_argument("FrequencyGrid: nx, ny must be even and >= 4");
    if (!(Lx > 0.0) || !(Ly > 0.0))
        throw std::invalid_argument("FrequencyGrid: periods must be positive");
    xi_.resize(nx);
    eta_.resize(ny);
    const double kx = 2.0 * std::numbers::pi / Lx;
    const double ky = 2.0 * std::numbers::pi / Ly;
    for (std::size_t i = 0; i < nx; ++i) xi_[i] = kx * static_cast<double>(mode_x(i));
    for (std::size_t i = 0; i < ny; ++i) eta_[i] = ky * static_cast<double>(mode_y(i));
}

std::size_t FrequencyGrid::index_of(long jx, long jy) const {
    const long nxl = static_cast<long>(nx_);
    const long nyl = static_cast<long>(ny_);
    long ix = ((jx % nxl) + nxl) % nxl;
    long iy = ((jy % nyl) + nyl) % nyl;
    return static_cast<std::size_t>(ix) * ny_ + static_cast<std::size_t>(iy);
}

double FrequencyGrid::dealias_limit_x() const {
    const long jmax = static_cast<long>(nx_) / 3;
    return 2.0 * std::numbers::pi / Lx_ * static_cast<double>(jmax);
}

double FrequencyGrid::dealias_limit_y() const {
    const long jmax = static_cast<long>(ny_) / 3;
    return 2.0 * std::numbers::pi / Ly_ * static_cast<double>(jmax);
}

}  // namespace kp2
