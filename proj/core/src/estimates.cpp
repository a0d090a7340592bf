#include "kp2/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "kp2/modulation.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/parallel.hpp"
#include "kp2/projections.hpp"
#include "kp2/propagator.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/rng.hpp"

namespace kp2 {

std::string to_string(EstimateName name) {
    switch (name) {
        case EstimateName::l4_strichartz: return "l4_strichartz";
        case EstimateName::local_smoothing: return "local_smoothing";
        case EstimateName::bilinear_N1N2: return "bilinear_N1N2";
        case EstimateName::bilinear_interpolated: return "bilinear_interpolated";
        case EstimateName::modulation_decay: return "modulation_decay";
        case EstimateName::besov_embedding: return "besov_embedding";
    }
    throw std::logic_error("to_string: unknown estimate");
}

EstimateName estimate_name_from_string(const std::string& s) {
    if (s == "l4_strichartz") return EstimateName::l4_strichartz;
    if (s == "local_smoothing") return EstimateName::local_smoothing;
    if (s == "bilinear_N1N2") return EstimateName::bilinear_N1N2;
    if (s == "bilinear_interpolated") return EstimateName::bilinear_interpolated;
    if (s == "modulation_decay") return EstimateName::modulation_decay;
    if (s == "besov_embedding") return EstimateName::besov_embedding;
    throw std::invalid_argument("unknown estimate name: " + s);
}

namespace {

bool tight_band_resolvable(const FrequencyGrid& g, DyadicIndex N) {
    const double Nv = N.value();
    for (std::size_t ix = 1; ix < g.nx(); ++ix) {
        const double a = std::fabs(g.xi(ix));
        if (a >= 0.95 * Nv && a <= 1.1 * Nv) return true;
    }
    return false;
}

bool annulus_resolvable(const FrequencyGrid& g, DyadicIndex N) {
    const double Nv = N.value();
    const double hi = std::min(2.0 * Nv, g.dealias_limit_x());
    for (std::size_t ix = 1; ix < g.nx(); ++ix) {
        const double a = std::fabs(g.xi(ix));
        if (a >= 0.5 * Nv && a <= hi) return true;
    }
    return false;
}

}  // namespace

void EstimateSpec::validate() const {
    if (trials < 1) throw std::invalid_argument("EstimateSpec: trials must be >= 1");
    if (nodes < 8 || (nodes & (nodes - 1)) != 0)
        throw std::invalid_argument("EstimateSpec: nodes must be a power of two >= 8");
    if (!(T > 0.0)) throw std::invalid_argument("EstimateSpec: window must be positive");
    const FrequencyGrid g = grid();
    switch (name) {
        case EstimateName::bilinear_N1N2:
        case EstimateName::bilinear_interpolated:
            if (!N1 || !N2)
                throw std::invalid_argument("EstimateSpec: bilinear estimates need N1 and N2");
            if (!annulus_resolvable(g, *N1) || !annulus_resolvable(g, *N2))
                throw std::invalid_argument("EstimateSpec: band not resolvable on this grid");
            break;
        case EstimateName::modulation_decay: {
            if (!M) throw std::invalid_argument("EstimateSpec: modulation_decay needs M");
            const double dtau = 2.0 * std::numbers::pi / T;
            if (M->value() < 2.0 * dtau || M->value() > dtau * static_cast<double>(nodes / 2))
                throw std::invalid_argument("EstimateSpec: modulation band not resolvable");
            break;
        }
        default:
            if (N1 && !tight_band_resolvable(g, *N1))
                throw std::invalid_argument("EstimateSpec: band not resolvable on this grid");
            break;
    }
}

std::vector<double> uniform_nodes_inclusive(double T, std::size_t n) {
    std::vector<double> t(n);
    const double dt = T / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) t[j] = dt * static_cast<double>(j);
    t.back() = T;
    return t;
}

std::vector<double> uniform_nodes_periodic(double T, std::size_t n) {
    std::vector<double> t(n);
    const double dt = T / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = dt * static_cast<double>(j);
    return t;
}

SampledPath free_solution_path(const Field2D& phi, const std::vector<double>& times) {
    std::vector<Field2D> vals(times.size(), Field2D::zero(phi.grid(), phi.real_flag()));
    parallel_for(times.size(), [&](std::size_t j) { vals[j] = free_propagate(phi, times[j]); });
    return SampledPath(times, std::move(vals));
}

namespace {

// Trapezoid weights over the sample window.
double time_weight(std::size_t j, std::size_t n, double dt) {
    return (j == 0 || j + 1 == n) ? 0.5 * dt : dt;
}

}  // namespace

double l4_spacetime_norm(const SampledPath& path) {
    double dt = 0.0;
    if (!path.uniform_times(&dt)) throw std::invalid_argument("l4 norm: nonuniform nodes");
    const double da = path.grid().cell_area();
    double acc = 0.0;
    for (std::size_t j = 0; j < path.size(); ++j) {
        const auto phys = path.value(j).to_physical();
        double s = 0.0;
        for (const auto& z : phys) {
            const double a2 = std::norm(z);
            s += a2 * a2;
        }
        acc += time_weight(j, path.size(), dt) * s * da;
    }
    return std::pow(acc, 0.25);
}

double l2_spacetime_norm(const SampledPath& path) {
    double dt = 0.0;
    if (!path.uniform_times(&dt)) throw std::invalid_argument("l2 norm: nonuniform nodes");
    double acc = 0.0;
    for (std::size_t j = 0; j < path.size(); ++j) {
        const double n = path.value(j).l2_norm();
        acc += time_weight(j, path.size(), dt) * n * n;
    }
    return std::sqrt(acc);
}

double linf_x_l2_ty_norm(const SampledPath& path) {
    double dt = 0.0;
    if (!path.uniform_times(&dt)) throw std::invalid_argument("linf norm: nonuniform nodes");
    const auto& g = path.grid();
    std::vector<double> col(g.nx(), 0.0);
    for (std::size_t j = 0; j < path.size(); ++j) {
        const auto phys = path.value(j).to_physical();
        const double w = time_weight(j, path.size(), dt) * g.dy();
        for (std::size_t a = 0; a < g.nx(); ++a) {
            double s = 0.0;
            for (std::size_t b = 0; b < g.ny(); ++b) s += std::norm(phys[a * g.ny() + b]);
            col[a] += w * s;
        }
    }
    double m = 0.0;
    for (double v : col) m = std::max(m, v);
    return std::sqrt(m);
}

double l4_ratio_of_data(const Field2D& phi, double T, std::size_t nodes) {
    const auto path = free_solution_path(phi, uniform_nodes_periodic(T, nodes));
    return l4_spacetime_norm(path) / phi.l2_norm();
}

namespace {

// One trial of each estimate; numerator/denominator per the inequality.
TrialRecord run_trial(const EstimateSpec& spec, const FrequencyGrid& grid,
                      std::uint64_t seed) {
    TrialRecord rec;
    rec.seed = seed;
    const auto nodes_p = uniform_nodes_periodic(spec.T, spec.nodes);

    switch (spec.name) {
        case EstimateName::l4_strichartz: {
            const Field2D phi = sample_band_limited_field(grid, spec.N1, seed, true);
            rec.numerator = l4_spacetime_norm(free_solution_path(phi, nodes_p));
            rec.denominator = phi.l2_norm();
            break;
        }
        case EstimateName::local_smoothing: {
            const Field2D phi = sample_band_limited_field(grid, spec.N1, seed, true);
            auto path = free_solution_path(phi, nodes_p);
            for (std::size_t j = 0; j < path.size(); ++j) path.value(j) = d_dx(path.value(j));
            rec.numerator = linf_x_l2_ty_norm(path);
            rec.denominator = phi.l2_norm();
            break;
        }
        case EstimateName::bilinear_N1N2: {
            Field2D f1 = project_frequency_band(
                sample_annulus_field(grid, *spec.N1, mix_seed(seed, 1), true), *spec.N1,
                BandKind::P_N);
            Field2D f2 = project_frequency_band(
                sample_annulus_field(grid, *spec.N2, mix_seed(seed, 2), true), *spec.N2,
                BandKind::P_N);
            f1 *= cplx{1.0 / f1.l2_norm(), 0.0};
            f2 *= cplx{1.0 / f2.l2_norm(), 0.0};
            const auto u1 = free_solution_path(f1, nodes_p);
            const auto u2 = free_solution_path(f2, nodes_p);
            std::vector<Field2D> prod;
            prod.reserve(spec.nodes);
            for (std::size_t j = 0; j < spec.nodes; ++j)
                prod.push_back(dealiased_product(u1.value(j), u2.value(j)));
            rec.numerator = l2_spacetime_norm(SampledPath(nodes_p, std::move(prod)));
            rec.denominator = 1.0;
            break;
        }
        case EstimateName::bilinear_interpolated: {
            auto make_path = [&](DyadicIndex N, std::uint64_t s) {
                StepAtom atom;
                atom.twisted = true;
                GaussianStream rng(s);
                const std::size_t jumps = 3;
                std::vector<double> jt;
                for (std::size_t k = 0; k < jumps; ++k)
                    jt.push_back(spec.T * (0.05 + 0.85 * rng.uniform()));
                std::sort(jt.begin(), jt.end());
                jt.erase(std::unique(jt.begin(), jt.end()), jt.end());
                atom.jump_times = jt;
                Field2D acc = Field2D::zero(grid, true);
                for (std::size_t k = 0; k < jumps; ++k) {
                    Field2D f = project_frequency_band(
                        sample_annulus_field(grid, N, mix_seed(s, k + 7), true), N,
                        BandKind::P_N);
                    f *= cplx{1.0 / f.l2_norm(), 0.0};
                    acc += f;
                    atom.values.push_back(acc);
                }
                return atom.sample_onto(uniform_nodes_periodic(spec.T, spec.nodes));
            };
            const auto u1 = make_path(*spec.N1, mix_seed(seed, 1));
            const auto u2 = make_path(*spec.N2, mix_seed(seed, 2));
            std::vector<Field2D> prod;
            prod.reserve(spec.nodes);
            for (std::size_t j = 0; j < spec.nodes; ++j)
                prod.push_back(dealiased_product(u1.value(j), u2.value(j)));
            rec.numerator = l2_spacetime_norm(SampledPath(nodes_p, std::move(prod)));
            rec.denominator = p_variation_norm(u1, 2.0, true) * p_variation_norm(u2, 2.0, true);
            break;
        }
        case EstimateName::modulation_decay: {
            StepAtom atom;
            atom.twisted = true;
            GaussianStream rng(seed);
            const std::size_t jumps = 6;
            std::vector<double> jt;
            // Jumps stay inside the taper's flat region so their 1/tau
            // spectra are not smoothed away.
            for (std::size_t k = 0; k < jumps; ++k)
                jt.push_back(spec.T * (0.2 + 0.6 * rng.uniform()));
            std::sort(jt.begin(), jt.end());
            jt.erase(std::unique(jt.begin(), jt.end()), jt.end());
            atom.jump_times = jt;
            Field2D acc = Field2D::zero(grid, false);
            for (std::size_t k = 0; k < jt.size(); ++k) {
                acc += sample_band_limited_field(grid, std::nullopt, mix_seed(seed, k + 3));
                atom.values.push_back(acc);
            }
            const auto u = atom.sample_onto(nodes_p);
            const auto spec_t = temporal_spectrum(u, true, spec.taper_alpha);
            const double Mv = spec.M->value();
            double mass2 = 0.0;
            for (std::size_t k = 0; k < spec_t.n_t; ++k) {
                const double m = CutoffFamily::psi(spec_t.tau(k) / Mv);
                if (m == 0.0) continue;
                double row = 0.0;
                for (const auto& z : spec_t.layers[k]) row += std::norm(z);
                mass2 += m * m * row;
            }
            rec.numerator = std::sqrt(Mv) * std::sqrt(spec_t.window_length() * mass2);
            rec.denominator = p_variation_norm(u, 2.0, true);
            break;
        }
        case EstimateName::besov_embedding: {
            StepAtom atom;
            GaussianStream rng(seed);
            const std::size_t jumps = 6;
            std::vector<double> jt;
            for (std::size_t k = 0; k < jumps; ++k)
                jt.push_back(spec.T * (0.2 + 0.6 * rng.uniform()));
            std::sort(jt.begin(), jt.end());
            jt.erase(std::unique(jt.begin(), jt.end()), jt.end());
            atom.jump_times = jt;
            Field2D acc = Field2D::zero(grid, false);
            for (std::size_t k = 0; k < jt.size(); ++k) {
                acc += sample_band_limited_field(grid, std::nullopt, mix_seed(seed, k + 3));
                atom.values.push_back(acc);
            }
            const auto v = atom.sample_onto(nodes_p);
            rec.numerator = besov_seminorm(v, 0.5, 2.0, q_infinity, spec.taper_alpha);
            rec.denominator = p_variation_norm(v, 2.0);
            break;
        }
    }
    rec.ratio = rec.numerator / rec.denominator;
    return rec;
}

std::string denominator_note(EstimateName name) {
    switch (name) {
        case EstimateName::l4_strichartz:
        case EstimateName::local_smoothing:
        case EstimateName::bilinear_N1N2:
            return "L2 of data (free solutions; U^p_S norm of a free solution)";
        case EstimateName::bilinear_interpolated:
        case EstimateName::modulation_decay:
            return "V^2_S exact (p-variation of the twisted step path)";
        case EstimateName::besov_embedding:
            return "V^2 exact (p-variation)";
    }
    return {};
}

}  // namespace

EstimateReport run_estimate(const EstimateSpec& spec) {
    spec.validate();
    const FrequencyGrid grid = spec.grid();

    EstimateReport rep;
    rep.spec = spec;
    rep.window_length = spec.T;
    rep.denominator_side = denominator_note(spec.name);
    rep.trials.resize(spec.trials);

    parallel_for(spec.trials, [&](std::size_t i) {
        rep.trials[i] = run_trial(spec, grid, mix_seed(spec.base_seed, i));
    });

    std::vector<double> ratios;
    ratios.reserve(spec.trials);
    double sum = 0.0;
    for (const auto& t : rep.trials) {
        ratios.push_back(t.ratio);
        sum += t.ratio;
        rep.max_ratio = std::max(rep.max_ratio, t.ratio);
    }
    rep.mean_ratio = sum / static_cast<double>(spec.trials);
    std::sort(ratios.begin(), ratios.end());
    auto quant = [&](double q) {
        const std::size_t idx = static_cast<std::size_t>(q * static_cast<double>(ratios.size() - 1));
        return ratios[idx];
    };
    rep.q50 = quant(0.5);
    rep.q90 = quant(0.9);
    rep.q99 = quant(0.99);
    return rep;
}

double replay_trial(const EstimateSpec& spec, std::size_t trial_index) {
    spec.validate();
    const FrequencyGrid grid = spec.grid();
    return run_trial(spec, grid, mix_seed(spec.base_seed, trial_index)).ratio;
}

FitResult fit_scaling_exponent(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<double> xs, ys;
    for (const auto& [x, y] : pairs) {
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("fit_scaling_exponent: needs positive data");
        xs.push_back(std::log(x));
        ys.push_back(std::log(y));
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end(),
                               [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
                   distinct.end());
    if (distinct.size() < 3)
        throw std::invalid_argument("fit_scaling_exponent: need >= 3 distinct scales");

    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    if (xs.size() > 2) {
        const double se = std::sqrt(ss_res / (n - 2.0) / sxx);
        fit.half_width = 2.0 * se;
    }
    return fit;
}

BilinearSweep bilinear_exponent_sweep(EstimateSpec base, const std::vector<int>& n2_exponents) {
    BilinearSweep sweep;
    const double T_base = base.T;
    for (int e : n2_exponents) {
        base.N2 = DyadicIndex(e);
        base.T = T_base * base.N1->value() / base.N2->value();
        EstimateReport rep = run_estimate(base);
        sweep.points.emplace_back(base.N1->value() / base.N2->value(), rep.max_ratio);
        sweep.windows.push_back(base.T);
        sweep.mixing_floor.push_back(std::sqrt(base.T / (base.Lx * base.Ly)));
        sweep.reports.push_back(std::move(rep));
    }
    sweep.fit = fit_scaling_exponent(sweep.points);
    return sweep;
}

}  // namespace kp2
