#pragma once

#include "kp2/field.hpp"

namespace kp2 {

// Non-isotropic Sobolev norm: quadrature of |xi|^{2s1}|eta|^{2s2} (homogeneous)
// or <xi>^{2s1}<eta>^{2s2} (inhomogeneous) against |u_hat|^2, square-rooted.
// Homogeneous weights with a negative exponent require the corresponding
// zero-frequency line to carry no mass; otherwise std::domain_error.
double sobolev_norm(const Field2D& u, double s1, double s2, bool homogeneous);

// Shorthand for the critical norm |xi|^{-1/2} weight.
inline double critical_norm(const Field2D& u) { return sobolev_norm(u, -0.5, 0.0, true); }

}  // namespace kp2
