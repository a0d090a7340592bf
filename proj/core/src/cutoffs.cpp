#include "kp2/cutoffs.hpp"

#include <stdexcept>

namespace kp2 {

DyadicIndex DyadicIndex::from_value(double value) {
    if (!(value > 0.0)) throw std::invalid_argument("DyadicIndex: value must be positive");
    int e = 0;
    const double mant = std::frexp(value, &e);  // value = mant * 2^e, mant in [0.5,1)
    if (mant != 0.5) throw std::invalid_argument("DyadicIndex: value is not a power of two");
    return DyadicIndex(e - 1);
}

namespace {
double transition(double s) {
    // exp(-1/s) for s > 0, zero otherwise; C^inf glue for the bump.
    return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}
}  // namespace

double CutoffFamily::chi(double t) {
    const double a = std::fabs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double up = transition(2.0 - a);
    const double down = transition(a - 1.0);
    return up / (up + down);
}

std::vector<DyadicIndex> CutoffFamily::blocks_meeting(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("blocks_meeting: need 0 < lo <= hi");
    // [N/2, 2N] meets [lo, hi] iff lo/2 <= N <= 2*hi.
    const int e_lo = static_cast<int>(std::ceil(std::log2(lo / 2.0) - 1e-12));
    const int e_hi = static_cast<int>(std::floor(std::log2(hi * 2.0) + 1e-12));
    std::vector<DyadicIndex> out;
    for (int e = e_lo; e <= e_hi; ++e) out.emplace_back(e);
    return out;
}

}  // namespace kp2
