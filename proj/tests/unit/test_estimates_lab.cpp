#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "kp2/estimates.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/projections.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/resonance.hpp"
#include "kp2/rng.hpp"
#include "kp2/symmetry.hpp"

using namespace kp2;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_CASE("resonance identity: worked values") {
    // xi = (1, 1, -2), eta = 0: |sum| = 6 = 3|xi1 xi2 xi3|, no cross term
    const auto a = resonance_check(1.0, 0.0, 1.0, 0.0);
    CHECK(a.sum_of_modulations == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(a.rhs_magnitude == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(a.lower_bound == doctest::Approx(6.0).epsilon(1e-14));

    // (1,1), (2,-1): cross = 3, xi3 = -3 -> |sum| = |-18 - 1.5| = 19.5
    const auto b = resonance_check(1.0, 1.0, 2.0, -1.0);
    CHECK(std::fabs(b.sum_of_modulations) == doctest::Approx(19.5).epsilon(1e-12));
    CHECK(b.rhs_magnitude == doctest::Approx(19.5).epsilon(1e-12));

    // parallel case eta1/xi1 = eta2/xi2: cross term vanishes exactly
    const auto c = resonance_check(1.0, 0.7, 2.0, 1.4);
    CHECK(std::fabs(c.sum_of_modulations) ==
          doctest::Approx(c.lower_bound).epsilon(1e-12));

    CHECK_THROWS_AS(resonance_check(0.0, 1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(resonance_check(1.0, 0.0, -1.0, 2.0), std::domain_error);

    // sampled triples: identity and lower bound
    GaussianStream rng(2024);
    for (int i = 0; i < 1000; ++i) {
        auto draw = [&] { return 8.0 * rng.uniform() - 4.0; };
        double x1 = draw(), x2 = draw();
        while (std::fabs(x1) < 0.1) x1 = draw();
        while (std::fabs(x2) < 0.1 || std::fabs(x1 + x2) < 0.1) x2 = draw();
        const auto rc = resonance_check(x1, draw(), x2, draw());
        CHECK(std::fabs(std::fabs(rc.sum_of_modulations) - rc.rhs_magnitude) <=
              1e-9 * rc.rhs_magnitude);
        CHECK(std::fabs(rc.sum_of_modulations) >= rc.lower_bound * (1 - 1e-12));
    }
}

TEST_CASE("band-limited sampler: determinism, normalization, band mass") {
    const FrequencyGrid g(64, 64, two_pi, two_pi);
    const Field2D a = sample_band_limited_field(g, DyadicIndex(3), 77, true);
    const Field2D b = sample_band_limited_field(g, DyadicIndex(3), 77, true);
    CHECK(a.coeffs() == b.coeffs());  // bit-for-bit
    CHECK(a.l2_norm() == doctest::Approx(1.0).epsilon(1e-12));
    a.validate();

    const Field2D pa = project_frequency_band(a, DyadicIndex(3), BandKind::P_N);
    CHECK(pa.l2_norm() * pa.l2_norm() >= 0.99);  // P_N passes 99% of the mass

    CHECK_THROWS(sample_band_limited_field(g, DyadicIndex(9), 1, true));  // beyond Nyquist
}

TEST_CASE("estimate reports: determinism and replay") {
    EstimateSpec spec;
    spec.name = EstimateName::l4_strichartz;
    spec.nx = spec.ny = 16;
    spec.T = 1.0;
    spec.nodes = 16;
    spec.trials = 24;
    spec.base_seed = 99;
    const auto r1 = run_estimate(spec);
    const auto r2 = run_estimate(spec);
    REQUIRE(r1.trials.size() == r2.trials.size());
    for (std::size_t i = 0; i < r1.trials.size(); ++i) {
        CHECK(r1.trials[i].ratio == r2.trials[i].ratio);  // bit-identical
        CHECK(replay_trial(spec, i) == r1.trials[i].ratio);
    }
    CHECK(r1.max_ratio == r2.max_ratio);
    CHECK(r1.q50 <= r1.q90);
    CHECK(r1.q90 <= r1.q99);
    CHECK(r1.q99 <= r1.max_ratio);
}

TEST_CASE("results do not depend on the worker-thread count") {
    EstimateSpec spec;
    spec.name = EstimateName::l4_strichartz;
    spec.nx = spec.ny = 16;
    spec.T = 1.0;
    spec.nodes = 16;
    spec.trials = 12;
    spec.base_seed = 3;
    setenv("KP2_THREADS", "1", 1);
    const auto serial = run_estimate(spec);
    setenv("KP2_THREADS", "4", 1);
    const auto threaded = run_estimate(spec);
    unsetenv("KP2_THREADS");
    for (std::size_t i = 0; i < serial.trials.size(); ++i)
        CHECK(serial.trials[i].ratio == threaded.trials[i].ratio);
    CHECK(serial.max_ratio == threaded.max_ratio);
}

TEST_CASE("estimate spec validation") {
    EstimateSpec spec;
    spec.name = EstimateName::bilinear_N1N2;
    spec.nx = spec.ny = 32;
    CHECK_THROWS(spec.validate());  // bands missing
    spec.N1 = DyadicIndex(0);
    spec.N2 = DyadicIndex(8);  // far beyond the grid
    CHECK_THROWS(spec.validate());
    spec.N2 = DyadicIndex(3);
    spec.validate();

    spec.trials = 0;
    CHECK_THROWS(spec.validate());
    spec.trials = 1;
    spec.nodes = 12;  // not a power of two
    CHECK_THROWS(spec.validate());
}

TEST_CASE("fit_scaling_exponent") {
    std::vector<std::pair<double, double>> pow_law;
    for (double x : {1.0, 2.0, 4.0, 8.0, 16.0})
        pow_law.emplace_back(x, 3.0 * std::sqrt(x));
    const auto f = fit_scaling_exponent(pow_law);
    CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.half_width < 1e-12);

    std::vector<std::pair<double, double>> flat{{1.0, 2.0}, {2.0, 2.0}, {4.0, 2.0}};
    CHECK(fit_scaling_exponent(flat).slope == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<std::pair<double, double>> degenerate{{1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}};
    CHECK_THROWS(fit_scaling_exponent(degenerate));
}

TEST_CASE("L4 ratio is invariant under the exact rescaling") {
    const FrequencyGrid g(32, 32, two_pi, two_pi);
    const Field2D phi = sample_band_limited_field(g, std::nullopt, 4, true);
    const double r1 = l4_ratio_of_data(phi, 1.0, 16);
    for (double lambda : {0.5, 2.0}) {
        const double rl =
            l4_ratio_of_data(apply_scaling(phi, lambda), 1.0 / (lambda * lambda * lambda), 16);
        CHECK(rl == doctest::Approx(r1).epsilon(1e-12));
    }
}

TEST_CASE("atom transfer: step atoms of free solutions do not beat singles") {
    const FrequencyGrid g(32, 32, two_pi, two_pi);
    const double T = 1.0;
    const std::size_t nodes = 32;
    const auto times = uniform_nodes_periodic(T, nodes);

    for (std::uint64_t s = 0; s < 5; ++s) {
        StepAtom atom;
        atom.twisted = true;
        atom.jump_times = {0.0, T / 3.0, 2.0 * T / 3.0};
        double cost2 = 0.0;
        std::vector<Field2D> phis;
        for (int k = 0; k < 3; ++k) {
            phis.push_back(sample_band_limited_field(g, std::nullopt, mix_seed(s, k), true));
            cost2 += 1.0;
        }
        const double scale = 1.0 / std::sqrt(cost2);
        double max_single = 0.0;
        for (auto& p : phis) {
            max_single = std::max(max_single, l4_ratio_of_data(p, T, nodes));
            p *= cplx{scale, 0.0};
            atom.values.push_back(p);
        }
        CHECK(atom.is_normalized_atom(2.0));
        const double atom_ratio = l4_spacetime_norm(atom.sample_onto(times));
        CHECK(atom_ratio <= max_single * (1.0 + 1e-9));
    }
}

TEST_CASE("modulation decay and besov embedding estimates are finite and sane") {
    EstimateSpec spec;
    spec.name = EstimateName::modulation_decay;
    spec.nx = spec.ny = 8;
    spec.T = two_pi;
    spec.nodes = 128;
    spec.trials = 10;
    spec.M = DyadicIndex(3);
    const auto rep = run_estimate(spec);
    CHECK(rep.max_ratio > 0.0);
    CHECK(rep.max_ratio < 5.0);
    CHECK(rep.denominator_side.find("V^2_S") != std::string::npos);

    spec.name = EstimateName::besov_embedding;
    const auto rep2 = run_estimate(spec);
    CHECK(rep2.max_ratio > 0.0);
    CHECK(rep2.max_ratio < 5.0);
}

TEST_CASE("besov embedding constant is stable across grid resolutions") {
    double consts[2] = {0.0, 0.0};
    int gi = 0;
    for (std::size_t n : {32, 64}) {
        EstimateSpec spec;
        spec.name = EstimateName::besov_embedding;
        spec.nx = spec.ny = n;
        spec.T = two_pi;
        spec.nodes = 64;
        spec.trials = 40;
        spec.base_seed = 5;
        consts[gi++] = run_estimate(spec).max_ratio;
    }
    const double spread = std::fabs(consts[0] - consts[1]) / std::max(consts[0], consts[1]);
    CHECK(spread < 0.2);
}

TEST_CASE("modulation decay constant is stable across grid resolutions") {
    double consts[2] = {0.0, 0.0};
    int gi = 0;
    for (std::size_t n : {32, 64}) {
        EstimateSpec spec;
        spec.name = EstimateName::modulation_decay;
        spec.nx = spec.ny = n;
        spec.T = two_pi;
        spec.nodes = 128;
        spec.trials = 10;
        spec.M = DyadicIndex(4);
        spec.base_seed = 6;
        consts[gi++] = run_estimate(spec).max_ratio;
    }
    const double spread = std::fabs(consts[0] - consts[1]) / std::max(consts[0], consts[1]);
    CHECK(spread < 0.2);
}

TEST_CASE("bilinear interpolated estimate runs and keeps V^2_S denominators") {
    EstimateSpec spec;
    spec.name = EstimateName::bilinear_interpolated;
    spec.nx = spec.ny = 32;
    spec.T = 0.5;
    spec.nodes = 16;
    spec.trials = 6;
    spec.N1 = DyadicIndex(0);
    spec.N2 = DyadicIndex(2);
    const auto rep = run_estimate(spec);
    CHECK(rep.max_ratio > 0.0);
    for (const auto& t : rep.trials) CHECK(t.denominator > 0.0);
}
