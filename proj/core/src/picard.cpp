#include "kp2/picard.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kp2/conserved.hpp"
#include "kp2/parallel.hpp"
#include "kp2/propagator.hpp"
#include "kp2/scattering.hpp"
#include "kp2/sobolev.hpp"

namespace kp2 {

void SolverConfig::validate() const {
    if (!(T > 0.0)) throw std::invalid_argument("SolverConfig: T must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
    if (nodes < 8) throw std::invalid_argument("SolverConfig: need at least 8 nodes");
    if ((nodes & (nodes - 1)) != 0)
        throw std::invalid_argument("SolverConfig: nodes must be a power of two");
    if (scattering_ramp && !(0.0 < ramp_start && ramp_start < ramp_end && ramp_end <= 1.0))
        throw std::invalid_argument("SolverConfig: ramp fractions must satisfy 0<start<end<=1");
}

std::vector<double> SolverConfig::node_times() const {
    std::vector<double> t(nodes);
    const double dt = T / static_cast<double>(nodes - 1);
    for (std::size_t j = 0; j < nodes; ++j) t[j] = dt * static_cast<double>(j);
    t.back() = T;
    return t;
}

std::vector<double> SolverConfig::ramp_weights() const {
    if (!scattering_ramp) return {};
    std::vector<double> w(nodes, 1.0);
    const auto times = node_times();
    const double a = ramp_start * T;
    const double b = ramp_end * T;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double t = times[j];
        if (t <= a)
            w[j] = 1.0;
        else if (t >= b)
            w[j] = 0.0;
        else
            w[j] = 0.5 * (1.0 + std::cos(std::numbers::pi * (t - a) / (b - a)));
    }
    return w;
}

namespace {

double path_max_critical_diff(const SampledPath& a, const SampledPath& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        Field2D d = a.value(j) - b.value(j);
        m = std::max(m, sobolev_norm(d, -0.5, 0.0, true));
    }
    return m;
}

}  // namespace

std::pair<SampledPath, SolutionDiagnostics> picard_solve(const Field2D& u0,
                                                         const SolverConfig& config) {
    config.validate();
    if (!u0.real_flag()) throw std::invalid_argument("picard_solve: data must be real");
    u0.validate();

    SolutionDiagnostics diag;
    diag.data_critical_norm = sobolev_norm(u0, -0.5, 0.0, true);

    const auto times = config.node_times();
    const auto ramp = config.ramp_weights();
    const std::vector<double>* weights = ramp.empty() ? nullptr : &ramp;

    // Free evolution e^{tS}u0 over the nodes.
    std::vector<Field2D> free_vals(config.nodes, Field2D::zero(u0.grid(), true));
    parallel_for(config.nodes, [&](std::size_t j) {
        free_vals[j] = free_propagate(u0, times[j]);
    });
    const SampledPath free_path(times, std::move(free_vals));

    SampledPath u = free_path;
    const double coupling = config.nonlinear_coupling;
    bool converged = coupling == 0.0 || diag.data_critical_norm == 0.0;
    std::size_t bad_streak = 0;

    for (std::size_t k = 0; !converged && k < config.max_iter; ++k) {
        SampledPath correction = duhamel_integral(u, u, config.T, config.quadrature, weights);
        correction *= cplx{-0.5 * coupling, 0.0};
        SampledPath next = free_path;
        next += correction;

        const double res = path_max_critical_diff(next, u);
        if (!diag.residuals.empty()) {
            const double rho = res / diag.residuals.back();
            diag.contraction_ratios.push_back(rho);
            bad_streak = rho >= 1.0 ? bad_streak + 1 : 0;
        }
        diag.residuals.push_back(res);
        diag.iterations = k + 1;
        u = std::move(next);

        if (res < config.tol) {
            converged = true;
        } else if (bad_streak >= 3) {
            throw solver_divergence_error(
                "picard_solve: data too large at this horizon (3 non-contracting steps)",
                std::move(diag));
        }
    }
    diag.converged = converged;
    if (!converged)
        throw solver_divergence_error("picard_solve: no convergence within max_iter",
                                      std::move(diag));

    // Fixed-point residual || u - e^{tS}u0 + (c/2) I_T(u,u) || path-max.
    {
        SampledPath rhs_corr = duhamel_integral(u, u, config.T, config.quadrature, weights);
        rhs_corr *= cplx{-0.5 * coupling, 0.0};
        SampledPath rhs = free_path;
        rhs += rhs_corr;
        diag.fixed_point_residual = path_max_critical_diff(u, rhs);
    }

    diag.I0_series.reserve(config.nodes);
    diag.I1_series.reserve(config.nodes);
    for (std::size_t j = 0; j < config.nodes; ++j) {
        const auto [i0, i1] = conserved_quantities(u.value(j));
        diag.I0_series.push_back(i0);
        diag.I1_series.push_back(i1);
    }

    diag.z_bracket = dyadic_space_norm_bracket(u, -0.5, SpaceKind::Z_dot);

    const std::vector<double> probes{0.25 * config.T, 0.5 * config.T, 0.75 * config.T,
                                     config.T};
    diag.scattering_increments = scattering_state(u, probes).increments;

    return {std::move(u), std::move(diag)};
}

}  // namespace kp2
