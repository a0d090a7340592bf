#pragma once

#include <vector>

#include "kp2/path.hpp"

namespace kp2 {

// Scattering-state extraction: u_plus = e^{-t_last S} u(t_last) together
// with the Cauchy increments ||e^{-t_{j+1}S}u(t_{j+1}) - e^{-t_jS}u(t_j)||
// in the critical norm over the probe times. With expect_cauchy set
// (converged small-data runs), an increase beyond 10% between consecutive
// increments raises std::runtime_error.
struct ScatteringResult {
    Field2D u_plus;
    std::vector<double> increments;
};

ScatteringResult scattering_state(const SampledPath& solution,
                                  const std::vector<double>& probe_times,
                                  bool expect_cauchy = false);

}  // namespace kp2
