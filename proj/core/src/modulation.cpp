#include "kp2/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kp2/fft_engine.hpp"
#include "kp2/projections.hpp"
#include "kp2/propagator.hpp"

namespace kp2 {

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

bool q_is_inf(double q) { return std::isinf(q) || q == q_infinity; }

void require_uniform_pow2(const SampledPath& path, double* dt) {
    if (!path.uniform_times(dt))
        throw std::invalid_argument("modulation: path must be uniformly sampled");
    if (!is_pow2(path.size()))
        throw std::invalid_argument("modulation: sample count must be a power of two");
}

}  // namespace

std::vector<double> cosine_taper(std::size_t n, double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("cosine_taper: alpha must lie in [0,1]");
    std::vector<double> w(n, 1.0);
    const std::size_t L = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(n) / 2.0));
    if (L == 0) return w;
    for (std::size_t i = 0; i < L; ++i)
        w[i] = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(i) / static_cast<double>(L)));
    for (std::size_t i = 1; i <= L; ++i) w[n - i] = w[i];
    return w;
}

double modulation_multiplier(ModulationKind kind, double tau, double M) {
    switch (kind) {
        case ModulationKind::Q_M:
            return CutoffFamily::psi(tau / M);
        case ModulationKind::Q_below:
            return CutoffFamily::chi(2.0 * tau / M);
        case ModulationKind::Q_at_or_above:
            return 1.0 - CutoffFamily::chi(2.0 * tau / M);
    }
    throw std::logic_error("modulation_multiplier: unknown kind");
}

double TemporalSpectrum::tau(std::size_t k) const {
    const long n = static_cast<long>(n_t);
    const long ks = k < n_t / 2 ? static_cast<long>(k) : static_cast<long>(k) - n;
    return 2.0 * std::numbers::pi * static_cast<double>(ks) / (static_cast<double>(n) * dt);
}

TemporalSpectrum temporal_spectrum(const SampledPath& path, bool untwist, double taper_alpha) {
    double dt = 0.0;
    require_uniform_pow2(path, &dt);
    const std::size_t n_t = path.size();
    const std::size_t modes = path.grid().size();
    const auto w = cosine_taper(n_t, taper_alpha);

    // Gather tapered (untwisted) samples, then transform along time per mode.
    std::vector<std::vector<cplx>> snap(n_t);
    for (std::size_t j = 0; j < n_t; ++j) {
        Field2D f = untwist ? free_propagate(path.value(j), -path.times()[j]) : path.value(j);
        snap[j] = std::move(f.coeffs());
        for (auto& z : snap[j]) z *= w[j];
    }

    TemporalSpectrum out;
    out.n_t = n_t;
    out.dt = dt;
    out.modes = modes;
    out.layers.assign(n_t, std::vector<cplx>(modes));
    std::vector<cplx> line(n_t), tline(n_t);
    const double scale = 1.0 / static_cast<double>(n_t);
    for (std::size_t m = 0; m < modes; ++m) {
        for (std::size_t j = 0; j < n_t; ++j) line[j] = snap[j][m];
        fft::forward_1d(n_t, line.data(), tline.data());
        for (std::size_t k = 0; k < n_t; ++k) out.layers[k][m] = tline[k] * scale;
    }
    return out;
}

SampledPath project_modulation(const SampledPath& path, DyadicIndex M, ModulationKind kind,
                               double taper_alpha) {
    TemporalSpectrum spec = temporal_spectrum(path, true, taper_alpha);
    const double Mv = M.value();
    for (std::size_t k = 0; k < spec.n_t; ++k) {
        const double m = modulation_multiplier(kind, spec.tau(k), Mv);
        for (auto& z : spec.layers[k]) z *= m;
    }
    // Back to time samples, then retwist.
    const std::size_t n_t = spec.n_t;
    const std::size_t modes = spec.modes;
    std::vector<std::vector<cplx>> snap(n_t, std::vector<cplx>(modes));
    std::vector<cplx> line(n_t), tline(n_t);
    for (std::size_t m = 0; m < modes; ++m) {
        for (std::size_t k = 0; k < n_t; ++k) line[k] = spec.layers[k][m];
        fft::backward_1d(n_t, line.data(), tline.data());
        for (std::size_t j = 0; j < n_t; ++j) snap[j][m] = tline[j];
    }
    std::vector<Field2D> vals;
    vals.reserve(n_t);
    for (std::size_t j = 0; j < n_t; ++j) {
        Field2D f(path.grid(), std::move(snap[j]), path.value(j).real_flag());
        vals.push_back(free_propagate(f, path.times()[j]));
    }
    return SampledPath(path.times(), std::move(vals), path.constant_before_first());
}

std::vector<DyadicIndex> resolvable_modulation_blocks(std::size_t n_t, double dt) {
    const double dtau = 2.0 * std::numbers::pi / (static_cast<double>(n_t) * dt);
    const double tau_max = dtau * static_cast<double>(n_t / 2);
    return CutoffFamily::blocks_meeting(dtau, tau_max);
}

double besov_seminorm(const SampledPath& path, double s, double p, double q,
                      double taper_alpha) {
    TemporalSpectrum spec = temporal_spectrum(path, false, taper_alpha);
    const auto blocks = resolvable_modulation_blocks(spec.n_t, spec.dt);
    const std::size_t n_t = spec.n_t;
    const std::size_t modes = spec.modes;

    std::vector<cplx> line(n_t), tline(n_t);
    double acc = 0.0;
    double sup = 0.0;
    for (const auto& N : blocks) {
        const double Nv = N.value();
        // Filter, transform back, take the L^p_t(L2) norm over the window.
        std::vector<double> norm2(n_t, 0.0);
        for (std::size_t m = 0; m < modes; ++m) {
            for (std::size_t k = 0; k < n_t; ++k)
                line[k] = spec.layers[k][m] * CutoffFamily::psi(spec.tau(k) / Nv);
            fft::backward_1d(n_t, line.data(), tline.data());
            for (std::size_t j = 0; j < n_t; ++j) norm2[j] += std::norm(tline[j]);
        }
        double block_norm;
        if (std::isinf(p)) {
            block_norm = 0.0;
            for (double v : norm2) block_norm = std::max(block_norm, std::sqrt(v));
        } else {
            double sum = 0.0;
            for (double v : norm2) sum += std::pow(std::sqrt(v), p);
            block_norm = std::pow(sum * spec.dt, 1.0 / p);
        }
        const double weighted = std::pow(Nv, s) * block_norm;
        if (q_is_inf(q)) {
            sup = std::max(sup, weighted);
        } else {
            acc += std::pow(weighted, q);
        }
    }
    return q_is_inf(q) ? sup : std::pow(acc, 1.0 / q);
}

double xsbq_seminorm(const SampledPath& path, double s, double b, double q,
                     double taper_alpha) {
    TemporalSpectrum spec = temporal_spectrum(path, true, taper_alpha);
    const auto& grid = path.grid();
    const auto xi_blocks = resolvable_bands(grid);
    const auto tau_blocks = resolvable_modulation_blocks(spec.n_t, spec.dt);
    const double T = spec.window_length();
    const std::size_t ny = grid.ny();

    double total = 0.0;
    for (const auto& N : xi_blocks) {
        const double Nv = N.value();
        // ||P_N Q^S_M u||^2_{L2(window)} for every tau block at once.
        std::vector<double> per_tau_bin(spec.n_t, 0.0);
        for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
            const double px = CutoffFamily::psi(grid.xi(ix) / Nv);
            if (px == 0.0) continue;
            const double px2 = px * px;
            for (std::size_t k = 0; k < spec.n_t; ++k) {
                const auto& layer = spec.layers[k];
                double row = 0.0;
                for (std::size_t iy = 0; iy < ny; ++iy) row += std::norm(layer[ix * ny + iy]);
                per_tau_bin[k] += px2 * row;
            }
        }
        double inner_acc = 0.0;
        double inner_sup = 0.0;
        bool any = false;
        for (const auto& M : tau_blocks) {
            const double Mv = M.value();
            double mass2 = 0.0;
            for (std::size_t k = 0; k < spec.n_t; ++k) {
                const double pm = CutoffFamily::psi(spec.tau(k) / Mv);
                mass2 += pm * pm * per_tau_bin[k];
            }
            const double l2 = std::sqrt(T * mass2);
            const double weighted = std::pow(Mv, b) * l2;
            any = true;
            if (q_is_inf(q))
                inner_sup = std::max(inner_sup, weighted);
            else
                inner_acc += std::pow(weighted, q);
        }
        if (!any) continue;
        const double inner = q_is_inf(q) ? inner_sup : std::pow(inner_acc, 1.0 / q);
        total += std::pow(Nv, 2.0 * s) * inner * inner;
    }
    return std::sqrt(total);
}

}  // namespace kp2
