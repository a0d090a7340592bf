#include "kp2/resonance.hpp"

#include <cmath>
#include <stdexcept>

namespace kp2 {

ResonanceCheck resonance_check(double xi1, double eta1, double xi2, double eta2,
                               double min_xi) {
    const double xi3 = -xi1 - xi2;
    const double eta3 = -eta1 - eta2;
    if (std::fabs(xi1) < min_xi || std::fabs(xi2) < min_xi || std::fabs(xi3) < min_xi)
        throw std::domain_error("resonance_check: xi factor too close to zero");

    // The tau_i cancel under tau1 + tau2 + tau3 = 0.
    auto lam = [](double xi, double eta) { return -xi * xi * xi + eta * eta / xi; };
    ResonanceCheck out;
    out.sum_of_modulations = lam(xi1, eta1) + lam(xi2, eta2) + lam(xi3, eta3);

    const double triple = xi1 * xi2 * xi3;
    const double cross = xi2 * eta1 - eta2 * xi1;
    out.rhs_magnitude = std::fabs(3.0 * triple + cross * cross / triple);
    out.lower_bound = 3.0 * std::fabs(triple);
    return out;
}

}  // namespace kp2
