#pragma once

#include <cmath>
#include <compare>
#include <vector>

namespace kp2 {

// A dyadic number N = 2^n, n in Z. Ordering follows the exponent.
class DyadicIndex {
public:
    explicit constexpr DyadicIndex(int exponent) : exponent_(exponent) {}

    // Requires value to be an exact power of two.
    static DyadicIndex from_value(double value);

    int exponent() const { return exponent_; }
    double value() const { return std::ldexp(1.0, exponent_); }

    auto operator<=>(const DyadicIndex&) const = default;
    DyadicIndex operator*(const DyadicIndex& o) const { return DyadicIndex(exponent_ + o.exponent_); }

private:
    int exponent_;
};

// The smooth Littlewood-Paley cutoff family. chi is an even C^inf bump
// with chi == 1 on [-1,1] and support in (-2,2), built from the standard
// exp(-1/s) transition; psi(t) = chi(t) - chi(2t) is supported in
// 1/2 <= |t| <= 2 with psi(1) = 1, and sum_N psi(t/N) = 1 for t != 0.
class CutoffFamily {
public:
    static double chi(double t);
    static double psi(double t) { return chi(t) - chi(2.0 * t); }
    static double psi_n(double t, double N) { return psi(t / N); }

    // Dyadic N whose block [N/2, 2N] meets [lo, hi]; lo > 0 required.
    static std::vector<DyadicIndex> blocks_meeting(double lo, double hi);
};

}  // namespace kp2
