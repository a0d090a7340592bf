#pragma once

namespace kp2 {

// Operator-norm transfer from U^p/U^q bounds to V^p: the closed form
//   4 C_p / alpha * (ln(C_q/C_p) + 2 alpha + 1),  alpha = (1 - p/q) ln 2,
// together with the integer N* minimizing 4 C_p N + 4 C_q 2^{-N(1-p/q)}
// (the quantity the closed form dominates), returned as a diagnostic.
struct InterpolationBound {
    double bound = 0.0;
    int n_star = 1;
    double discrete_min = 0.0;
};

// Requires 1 <= p < q and 0 < C_p <= C_q.
InterpolationBound interpolation_bound(double C_p, double C_q, double p, double q);

}  // namespace kp2
