#pragma once

#include "kp2/cutoffs.hpp"
#include "kp2/field.hpp"

namespace kp2 {

class SampledPath;

// Smooth Littlewood-Paley projections acting in xi only.
enum class BandKind {
    P_N,           // psi(xi/N)
    P_0,           // chi(2 xi), identical to P_below at N = 1
    P_below,       // chi(2 xi / N)
    P_at_or_above  // 1 - chi(2 xi / N)
};

double band_multiplier(BandKind kind, double xi, double N);

Field2D project_frequency_band(const Field2D& u, DyadicIndex N, BandKind kind);
SampledPath project_frequency_band(const SampledPath& u, DyadicIndex N, BandKind kind);

// Dyadic xi-bands resolvable on the grid (blocks meeting the positive
// frequency range [2pi/Lx, xi_max]).
std::vector<DyadicIndex> resolvable_bands(const FrequencyGrid& grid);

}  // namespace kp2
