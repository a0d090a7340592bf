#pragma once

#include <cstdint>
#include <optional>

#include "kp2/cutoffs.hpp"
#include "kp2/path.hpp"

namespace kp2 {

// Complex Gaussian coefficients on a dyadic band (or on the full usable
// band when none is given), xi=0 column zeroed, Hermitian-symmetrized
// when a real field is requested, unit L2. The populated band is the
// tight annulus 0.95 N <= |xi| <= 1.1 N, so P_N passes >= 99% of the mass.
// Throws when the band contains no grid mode.
Field2D sample_band_limited_field(const FrequencyGrid& grid, std::optional<DyadicIndex> band,
                                  std::uint64_t seed, bool real_field = false);

// Gaussian coefficients over the dyadic annulus N/2 <= |xi| <= 2N clipped
// to the dealias-safe range; the trial generator behind the bilinear
// estimates, where wide supports keep large N2/N1 ratios resolvable.
Field2D sample_annulus_field(const FrequencyGrid& grid, DyadicIndex band, std::uint64_t seed,
                             bool real_field = false);

// Smooth random datum for the solver: Gaussian coefficients under a
// exp(-xi^2/(2 sigma_x^2) - eta^2/(2 sigma_y^2)) envelope, real, zero
// x-mean, dealiased, normalized to the requested critical-norm size.
// sigma_y <= 0 means sigma_y = sigma_x.
Field2D sample_gaussian_data(const FrequencyGrid& grid, std::uint64_t seed,
                             double target_critical_norm, double sigma_x = 2.0,
                             double sigma_y = 0.0);

// Normalized U^p atom with jump_count jumps at sorted uniform random
// times in [t_lo, t_hi], Gaussian full-band values.
StepAtom sample_step_atom(const FrequencyGrid& grid, std::size_t jump_count, double p,
                          std::uint64_t seed, double t_lo = 0.0, double t_hi = 1.0,
                          bool twisted = false);

// Gaussian step path (no normalization) with jump_count jumps.
SampledPath sample_step_path(const FrequencyGrid& grid, std::size_t jump_count,
                             std::uint64_t seed, double t_lo = 0.0, double t_hi = 1.0);

}  // namespace kp2
