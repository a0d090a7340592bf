#include "kp2/p_variation.hpp"

#include <cmath>
#include <stdexcept>

#include "kp2/propagator.hpp"

namespace kp2 {

double p_variation_norm(const SampledPath& v, double p, bool twist) {
    if (!(p >= 1.0)) throw std::invalid_argument("p_variation_norm: p must be >= 1");
    const std::size_t n = v.size();

    // Augmented value sequence: v(-inf), samples, v(inf) = 0.
    std::vector<std::vector<cplx>> vals;
    vals.reserve(n + 2);
    vals.push_back(v.value_at_neg_inf().coeffs());
    for (std::size_t i = 0; i < n; ++i) {
        Field2D f = twist ? free_propagate(v.value(i), -v.times()[i]) : v.value(i);
        vals.push_back(std::move(f.coeffs()));
    }
    vals.push_back(Field2D::zero(v.grid()).coeffs());
    // constant_before_first: v(-inf) is the limit of the untwisted path;
    // untwisting the first sample keeps the two consistent.
    if (twist && v.constant_before_first()) vals.front() = vals[1];

    const std::size_t m = vals.size();
    auto dist = [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        const auto& x = vals[a];
        const auto& y = vals[b];
        for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
        return std::sqrt(s);
    };

    // best[i]: maximal sum of |increment|^p over chains ending at point i.
    std::vector<double> best(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        double b = 0.0;
        for (std::size_t j = 0; j < i; ++j)
            b = std::max(b, best[j] + std::pow(dist(j, i), p));
        best[i] = b;
    }
    return std::pow(best[m - 1], 1.0 / p);
}

}  // namespace kp2
