#pragma once

#include "kp2/cutoffs.hpp"
#include "kp2/field.hpp"
#include "kp2/path.hpp"

namespace kp2 {

// The exact symmetry transforms of the equation, realized grid-exactly.
//
// Scaling u -> lambda^2 u(lambda^3 t, lambda x, lambda^2 y): identity on
// coefficient indices, periods rescale to (Lx/lambda, Ly/lambda^2), the
// amplitude picks up lambda^{1/2}, times map to t/lambda^3. Exact for
// power-of-two lambda (enforced).
Field2D apply_scaling(const Field2D& u, double lambda);
SampledPath apply_scaling(const SampledPath& path, double lambda);

// Galilean shear u(t, x - c y - c^2 t, y + 2 c t): per xi-column cyclic
// eta-index shift by c*xi/d_eta plus the t-dependent phase. Requires the
// shear steps c*j*Ly/Lx to be integers (grid-exact c).
Field2D apply_galilean(const Field2D& u, double c, double t);
SampledPath apply_galilean(const SampledPath& path, double c);

// x-reflection (spectral index flip xi -> -xi).
Field2D apply_x_reflection(const Field2D& u);

// Time reversal of a solution path on [t0, t1]: node order flips and
// fields are x-reflected, so the result solves the same equation forward.
SampledPath apply_time_reversal(const SampledPath& path);

// Large-data reduction: split off the high band with small critical norm,
// measure R = ||low band||_{L2}, rescale by the power-of-two lambda just
// below (delta/R)^2 and report the guaranteed local horizon delta^6/R^6.
struct RescaleResult {
    double lambda = 1.0;
    Field2D data;
    double T_local = 0.0;
    double R = 0.0;             // L2 norm of the low-frequency part
    int split_exponent = 0;     // dyadic split frequency
};
RescaleResult rescale_to_small_data(const Field2D& u0, double delta);

}  // namespace kp2
