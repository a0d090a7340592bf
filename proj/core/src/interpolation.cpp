#include "kp2/interpolation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kp2 {

InterpolationBound interpolation_bound(double C_p, double C_q, double p, double q) {
    if (!(p >= 1.0) || !(q > p))
        throw std::invalid_argument("interpolation_bound: need 1 <= p < q");
    if (!(C_p > 0.0) || !(C_q >= C_p))
        throw std::invalid_argument("interpolation_bound: need 0 < C_p <= C_q");

    const double alpha = (1.0 - p / q) * std::numbers::ln2;
    InterpolationBound out;
    out.bound = 4.0 * C_p / alpha * (std::log(C_q / C_p) + 2.0 * alpha + 1.0);

    const double rate = 1.0 - p / q;
    double best = std::numeric_limits<double>::infinity();
    // The objective is convex in N; scanning far past the continuous
    // minimizer ln(C_q/C_p * alpha ...) is cheap and safe.
    const int n_hi = std::max(64, static_cast<int>(std::ceil(std::log2(C_q / C_p) / rate)) + 8);
    for (int N = 1; N <= n_hi; ++N) {
        const double v = 4.0 * C_p * N + 4.0 * C_q * std::pow(2.0, -rate * N);
        if (v < best) {
            best = v;
            out.n_star = N;
        }
    }
    out.discrete_min = best;
    return out;
}

}  // namespace kp2
