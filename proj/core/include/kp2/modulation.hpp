#pragma once

#include "kp2/cutoffs.hpp"
#include "kp2/path.hpp"

namespace kp2 {

// Periodic-symmetric cosine taper (w[i] = w[n-i]); alpha is the tapered
// fraction of the window, alpha = 1 being the exact periodic Hann window.
// Finite-horizon paths are tapered before the temporal transform so the
// discrete filters see a periodization without an endpoint jump.
std::vector<double> cosine_taper(std::size_t n, double alpha);

enum class ModulationKind { Q_M, Q_below, Q_at_or_above };

double modulation_multiplier(ModulationKind kind, double tau, double M);

// Temporal spectrum of a (possibly untwisted and tapered) path: one
// spatial coefficient layer per time-frequency bin, bins in FFT order.
struct TemporalSpectrum {
    std::size_t n_t = 0;
    double dt = 0.0;
    std::size_t modes = 0;            // nx*ny spatial coefficients per layer
    std::vector<std::vector<cplx>> layers;

    double window_length() const { return static_cast<double>(n_t) * dt; }
    // Signed time frequency of bin k.
    double tau(std::size_t k) const;
};

// Decompose the path along time. With untwist set, samples are first
// conjugated by e^{-tS} (the Q^S = e^{.S} Q e^{-.S} relation); the taper
// is applied after untwisting. Requires uniform, power-of-two sampling.
TemporalSpectrum temporal_spectrum(const SampledPath& path, bool untwist, double taper_alpha);

// Q^S_M and companions via conjugation: untwist, filter in tau, retwist.
// Linear; Q^S_{<M} + Q^S_{>=M} reproduces the tapered path exactly.
SampledPath project_modulation(const SampledPath& path, DyadicIndex M, ModulationKind kind,
                               double taper_alpha = 1.0);

// Dyadic temporal blocks resolvable on the sampling window.
std::vector<DyadicIndex> resolvable_modulation_blocks(std::size_t n_t, double dt);

// Besov seminorm (2.7): l^q over dyadic temporal blocks N of
// N^s ||Q_N path||_{L^p_t(L2)}, untwisted blocks, q = inf -> max.
double besov_seminorm(const SampledPath& path, double s, double p, double q,
                      double taper_alpha = 1.0);

// X^{s,b,q} seminorm: ( sum_N N^{2s} ( sum_M M^{bq} ||P_N Q^S_M u||_{L2}^q )^{2/q} )^{1/2},
// space-time L2 over the sampling window, q = inf -> sup over M.
double xsbq_seminorm(const SampledPath& path, double s, double b, double q,
                     double taper_alpha = 1.0);

constexpr double q_infinity = -1.0;  // sentinel accepted by the q parameters

}  // namespace kp2
