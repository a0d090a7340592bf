#pragma once

#include <optional>
#include <vector>

#include "kp2/path.hpp"

namespace kp2 {

enum class Quadrature { trapezoid, simpson };

// The Duhamel term t -> int_0^t 1_{[0,T)} e^{(t-t')S} d/dx(u1 u2)(t') dt'
// on the shared uniform node grid of the inputs: dealiased physical
// product, d/dx as the i*xi multiplier, propagator twist, cumulative
// composite quadrature (Simpson by default, O(dt^4)). Bilinear; zero at
// the first node. Inputs must be real-valued fields starting at t = 0.
// weights, when given, multiplies the integrand per node (the smooth
// horizon ramp used by scattering runs).
SampledPath duhamel_integral(const SampledPath& u1, const SampledPath& u2, double T,
                             Quadrature quad = Quadrature::simpson,
                             const std::vector<double>* weights = nullptr);

}  // namespace kp2
