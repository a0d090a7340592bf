#pragma once

namespace kp2 {

// The resonance identity for convolution-constrained frequency triples
// (xi3 = -xi1-xi2, eta3 = -eta1-eta2, tau3 = -tau1-tau2): the sum of the
// three modulations lambda_i = tau_i - xi_i^3 + eta_i^2/xi_i is
// tau-independent and equals, up to orientation,
//   3 xi1 xi2 xi3 + (xi2 eta1 - eta2 xi1)^2 / (xi1 xi2 xi3),
// whose two terms share the sign of xi1 xi2 xi3, so
//   |sum lambda| >= 3 |xi1 xi2 xi3|.
struct ResonanceCheck {
    double sum_of_modulations = 0.0;  // computed directly from the lambda_i
    double rhs_magnitude = 0.0;       // |3 xi1 xi2 xi3 + cross^2/(xi1 xi2 xi3)|
    double lower_bound = 0.0;         // 3 |xi1 xi2 xi3|
};

// Throws std::domain_error when any of xi1, xi2, xi1+xi2 is (near) zero.
ResonanceCheck resonance_check(double xi1, double eta1, double xi2, double eta2,
                               double min_xi = 1e-12);

}  // namespace kp2
