#pragma once

#include <utility>

#include "kp2/field.hpp"

namespace kp2 {

// I0 = 1/2 int u^2; I1 = 1/2 int (du/dx)^2 - u^3/3 - (dx^{-1} du/dy)^2.
// Spectral derivatives, dealiased cubic term; 1/dx is division by (i xi),
// well-defined because lab fields carry no xi=0 mass. Requires a real
// field; nonzero xi=0 mass raises std::domain_error.
std::pair<double, double> conserved_quantities(const Field2D& u);

}  // namespace kp2
