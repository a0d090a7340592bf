#include "kp2/scattering.hpp"

#include <algorithm>
#include <stdexcept>

#include "kp2/propagator.hpp"
#include "kp2/sobolev.hpp"

namespace kp2 {

ScatteringResult scattering_state(const SampledPath& solution,
                                  const std::vector<double>& probe_times,
                                  bool expect_cauchy) {
    if (probe_times.empty())
        throw std::invalid_argument("scattering_state: no probe times");
    for (double t : probe_times)
        if (t < solution.times().front() || t > solution.times().back())
            throw std::invalid_argument("scattering_state: probe time outside horizon");

    // Probes snap to the nearest sample so the untwist time matches the
    // stored value exactly (an off-node untwist would inject spurious
    // high-frequency phase into the increments).
    std::vector<Field2D> states;
    states.reserve(probe_times.size());
    const auto& ts = solution.times();
    for (double t : probe_times) {
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        std::size_t idx = static_cast<std::size_t>(std::distance(ts.begin(), it));
        if (idx == ts.size() || (idx > 0 && t - ts[idx - 1] < ts[idx] - t)) --idx;
        states.push_back(free_propagate(solution.value(idx), -ts[idx]));
    }

    ScatteringResult out{states.back(), {}};
    for (std::size_t j = 1; j < states.size(); ++j) {
        Field2D d = states[j] - states[j - 1];
        out.increments.push_back(sobolev_norm(d, -0.5, 0.0, true));
    }
    if (expect_cauchy) {
        for (std::size_t j = 1; j < out.increments.size(); ++j)
            if (out.increments[j] > 1.1 * out.increments[j - 1])
                throw std::runtime_error(
                    "scattering_state: increments grew by more than 10% between probes");
    }
    return out;
}

}  // namespace kp2
