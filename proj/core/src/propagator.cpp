#include "kp2/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace kp2 {

double kp_symbol(double xi, double eta) {
    if (xi == 0.0) throw std::domain_error("kp_symbol: xi = 0 is singular");
    return xi * xi * xi - eta * eta / xi;
}

Field2D free_propagate(const Field2D& u, double t) {
    Field2D out = u;
    if (t == 0.0) return out;
    const auto& g = u.grid();
    const std::size_t ny = g.ny();
    for (std::size_t ix = 1; ix < g.nx(); ++ix) {  // ix = 0 column stays zero
        const double xi = g.xi(ix);
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double omega = kp_symbol(xi, g.eta(iy));
            const double phase = t * omega;
            out.coeffs()[ix * ny + iy] *= cplx{std::cos(phase), std::sin(phase)};
        }
    }
    out.set_real_flag(u.real_flag());
    return out;
}

}  // namespace kp2
