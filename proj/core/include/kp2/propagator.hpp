#pragma once

#include "kp2/field.hpp"

namespace kp2 {

// Dispersion relation of the KP-II free evolution: omega = xi^3 - eta^2/xi.
// Throws std::domain_error when xi == 0 (the singular direction).
double kp_symbol(double xi, double eta);

// e^{tS}: multiply each coefficient by exp(i t omega(xi,eta)). Unitary;
// the xi=0 column (zero by invariant) is left untouched.
Field2D free_propagate(const Field2D& u, double t);

}  // namespace kp2
