#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kp2/duhamel.hpp"
#include "kp2/errors.hpp"
#include "kp2/field.hpp"
#include "kp2/space_norms.hpp"

namespace kp2 {

struct SolverConfig {
    std::size_t nx = 128, ny = 128;
    double Lx = 6.283185307179586476925286766559;  // 2*pi
    double Ly = 6.283185307179586476925286766559;
    double T = 1.0;
    std::size_t nodes = 64;        // power of two
    double tol = 1e-9;             // residual in the critical path-max norm
    std::size_t max_iter = 25;
    Quadrature quadrature = Quadrature::simpson;
    double nonlinear_coupling = 1.0;  // 0 turns the nonlinearity off (test hook)
    // Scattering runs smoothly switch the nonlinearity off over
    // [ramp_start*T, ramp_end*T]; the late solution is then exactly free
    // and e^{-tS}u(t) stabilizes (the finite-horizon stand-in for I_inf).
    bool scattering_ramp = false;
    double ramp_start = 0.5;
    double ramp_end = 0.75;

    void validate() const;
    std::vector<double> node_times() const;
    std::vector<double> ramp_weights() const;  // empty when disabled
};

struct SolutionDiagnostics {
    std::vector<double> residuals;           // per completed iteration
    std::vector<double> contraction_ratios;  // rho_k = r_{k+1}/r_k
    std::vector<double> I0_series, I1_series;
    std::vector<double> scattering_increments;
    SpaceNormBracket z_bracket;              // critical Z_dot bracket of the solution
    std::size_t iterations = 0;
    bool converged = false;
    double fixed_point_residual = 0.0;
    double data_critical_norm = 0.0;
};

// Divergence ("data too large at this horizon") carrying what was measured.
class solver_divergence_error : public divergence_error {
public:
    solver_divergence_error(const std::string& what, SolutionDiagnostics diag)
        : divergence_error(what), diagnostics(std::move(diag)) {}
    SolutionDiagnostics diagnostics;
};

// Picard iteration on the operator equation u = e^{tS}u0 - 1/2 I_T(u,u):
// starts from the free solution, stops when the critical-norm path-max
// residual drops below tol. Three consecutive non-contracting steps
// raise solver_divergence_error.
std::pair<SampledPath, SolutionDiagnostics> picard_solve(const Field2D& u0,
                                                         const SolverConfig& config);

}  // namespace kp2
