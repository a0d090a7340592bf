#include "kp2/conserved.hpp"

#include <cmath>
#include <stdexcept>

namespace kp2 {

std::pair<double, double> conserved_quantities(const Field2D& u) {
    if (!u.real_flag()) throw std::domain_error("conserved_quantities: field must be real");
    const auto& g = u.grid();
    const double scale = std::max(u.max_abs_coeff(), 1e-300);
    for (std::size_t iy = 0; iy < g.ny(); ++iy)
        if (std::abs(u.at(0, iy)) > 1e-12 * scale)
            throw std::domain_error("conserved_quantities: nonzero xi=0 column");

    const double l2 = u.l2_norm();
    const double I0 = 0.5 * l2 * l2;

    // Quadratic pieces by Plancherel.
    double dx2 = 0.0, dyx2 = 0.0;
    for (std::size_t ix = 1; ix < g.nx(); ++ix) {
        const double xi = g.xi(ix);
        for (std::size_t iy = 0; iy < g.ny(); ++iy) {
            const double eta = g.eta(iy);
            const double a2 = std::norm(u.at(ix, iy));
            dx2 += xi * xi * a2;
            dyx2 += (eta / xi) * (eta / xi) * a2;
        }
    }

    // Cubic term int u^3 = <u, dealias(u u)> for real u.
    const Field2D uu = dealiased_product(u, u);
    const double cubic = inner_product(u, uu).real();

    const double I1 = 0.5 * dx2 - cubic / 6.0 - 0.5 * dyx2;
    return {I0, I1};
}

}  // namespace kp2
