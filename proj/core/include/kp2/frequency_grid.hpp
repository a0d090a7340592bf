#pragma once

#include <cstddef>
#include <vector>

namespace kp2 {

// Discrete frequency lattice of a periodic box [0,Lx) x [0,Ly).
// Coefficients are stored in FFT index order: linear index ix*ny + iy,
// where ix maps to the signed mode jx = ix < nx/2 ? ix : ix - nx and
// xi = 2*pi*jx/Lx (same for the y axis).
class FrequencyGrid {
public:
    FrequencyGrid(std::size_t nx, std::size_t ny, double Lx, double Ly);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    double Lx() const { return Lx_; }
    double Ly() const { return Ly_; }
    std::size_t size() const { return nx_ * ny_; }

    // Signed integer mode for a storage index.
    long mode_x(std::size_t ix) const {
        return ix < nx_ / 2 ? static_cast<long>(ix) : static_cast<long>(ix) - static_cast<long>(nx_);
    }
    long mode_y(std::size_t iy) const {
        return iy < ny_ / 2 ? static_cast<long>(iy) : static_cast<long>(iy) - static_cast<long>(ny_);
    }

    double xi(std::size_t ix) const { return xi_[ix]; }
    double eta(std::size_t iy) const { return eta_[iy]; }
    const std::vector<double>& xi_all() const { return xi_; }
    const std::vector<double>& eta_all() const { return eta_; }

    // Storage index of the mode with signed indices (jx, jy); indices are
    // wrapped modulo the grid, so e.g. -1 maps to nx-1.
    std::size_t index_of(long jx, long jy) const;

    double dx() const { return Lx_ / static_cast<double>(nx_); }
    double dy() const { return Ly_ / static_cast<double>(ny_); }
    double cell_area() const { return dx() * dy(); }

    // Largest usable |xi| after 2/3-rule dealiasing.
    double dealias_limit_x() const;
    double dealias_limit_y() const;

    bool compatible(const FrequencyGrid& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_ && Lx_ == other.Lx_ && Ly_ == other.Ly_;
    }
    bool operator==(const FrequencyGrid& other) const { return compatible(other); }

private:
    std::size_t nx_, ny_;
    double Lx_, Ly_;
    std::vector<double> xi_, eta_;
};

}  // namespace kp2
