#include "kp2/sobolev.hpp"

#include <cmath>
#include <stdexcept>

namespace kp2 {

double sobolev_norm(const Field2D& u, double s1, double s2, bool homogeneous) {
    const auto& g = u.grid();
    const std::size_t ny = g.ny();
    const double scale = std::max(u.max_abs_coeff(), 1e-300);
    double sum = 0.0;
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const double xi = g.xi(ix);
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double eta = g.eta(iy);
            const double a2 = std::norm(u.at(ix, iy));
            if (a2 == 0.0) continue;
            double wx, wy;
            if (homogeneous) {
                if (xi == 0.0 && s1 != 0.0) {
                    if (s1 < 0.0 && std::sqrt(a2) > 1e-12 * scale)
                        throw std::domain_error("sobolev_norm: mass on the singular xi=0 line");
                    wx = 0.0;  // s1 > 0: |0|^{2s1} = 0
                } else {
                    wx = s1 == 0.0 ? 1.0 : std::pow(std::fabs(xi), 2.0 * s1);
                }
                if (eta == 0.0 && s2 != 0.0) {
                    if (s2 < 0.0 && std::sqrt(a2) > 1e-12 * scale)
                        throw std::domain_error("sobolev_norm: mass on the singular eta=0 line");
                    wy = 0.0;
                } else {
                    wy = s2 == 0.0 ? 1.0 : std::pow(std::fabs(eta), 2.0 * s2);
                }
            } else {
                wx = s1 == 0.0 ? 1.0 : std::pow(1.0 + xi * xi, s1);
                wy = s2 == 0.0 ? 1.0 : std::pow(1.0 + eta * eta, s2);
            }
            sum += wx * wy * a2;
        }
    }
    return std::sqrt(sum);
}

}  // namespace kp2
