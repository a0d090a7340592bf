#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kp2/bilinear.hpp"
#include "kp2/estimates.hpp"
#include "kp2/greedy.hpp"
#include "kp2/interpolation.hpp"
#include "kp2/modulation.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/projections.hpp"
#include "kp2/propagator.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/rng.hpp"
#include "kp2/space_norms.hpp"
#include "kp2/up_bracket.hpp"

using namespace kp2;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
FrequencyGrid grid8() { return FrequencyGrid(8, 8, two_pi, two_pi); }

Field2D unit_mode(const FrequencyGrid& g) {
    return Field2D::single_mode(g, 1, 0, cplx{1.0, 0.0});
}
}  // namespace

TEST_CASE("partition invariants") {
    CHECK_THROWS(Partition::class_z({1.0, 1.0}));
    CHECK_THROWS(Partition({}, false, false));
    const Partition p = Partition::class_z({0.0, 1.0});
    CHECK(p.point_count() == 4);
    CHECK(p.refined_dyadic().interior().size() == 3);
    const Partition m = Partition::merge(Partition::class_z({0.0, 2.0}), p);
    CHECK(m.interior() == std::vector<double>{0.0, 1.0, 2.0});

    // class Z_0: finite start, optionally +inf at the end
    const Partition z0 = Partition::class_z0({0.0, 1.0});
    CHECK_FALSE(z0.has_neg_inf());
    CHECK(z0.has_pos_inf());
    CHECK(z0.point_count() == 3);
}

TEST_CASE("sampled path conventions") {
    const auto g = grid8();
    const Field2D phi = unit_mode(g);
    const SampledPath v({0.0, 1.0}, {phi, Field2D::zero(g, false)});
    CHECK(v.eval(-0.5).l2_norm() == 0.0);       // zero before first sample
    CHECK(v.eval(0.0).l2_norm() == 1.0);        // right-continuous at samples
    CHECK(v.eval(0.99).l2_norm() == 1.0);
    CHECK(v.eval(5.0).l2_norm() == 0.0);
    CHECK(v.value_at_pos_inf().l2_norm() == 0.0);

    const SampledPath c({0.0}, {phi}, /*constant_before_first=*/true);
    CHECK(c.eval(-3.0).l2_norm() == 1.0);
}

TEST_CASE("p-variation: the named examples") {
    const auto g = grid8();
    const Field2D phi = unit_mode(g);

    // indicator of [0,1): two unit jumps
    const SampledPath ind({0.0, 1.0}, {phi, Field2D::zero(g, false)});
    CHECK(p_variation_norm(ind, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // constant path: a single jump at +inf under the limit convention
    const SampledPath cst({0.0}, {phi}, true);
    for (double p : {1.5, 2.0, 3.0})
        CHECK(p_variation_norm(cst, p) == doctest::Approx(1.0).epsilon(1e-12));

    // scalar samples (0, 1, 0.5, 2) at t = 0..3, p = 2 -> 2*sqrt(2),
    // the optimum {-inf, 3, inf} found by exhaustive enumeration
    std::vector<Field2D> vals;
    for (double a : {0.0, 1.0, 0.5, 2.0}) {
        Field2D f = phi;
        f *= cplx{a, 0.0};
        vals.push_back(f);
    }
    const SampledPath scal({0.0, 1.0, 2.0, 3.0}, vals);
    CHECK(p_variation_norm(scal, 2.0) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS(p_variation_norm(ind, 0.5));
}

TEST_CASE("p-variation with twist") {
    const auto g = grid8();
    const Field2D phi = sample_band_limited_field(g, std::nullopt, 5, true);
    const auto times = uniform_nodes_periodic(1.0, 16);
    const auto path = free_solution_path(phi, times);
    // untwisted free solution is constant: single terminal jump with the
    // limit convention, two jumps with the default zero convention
    const SampledPath flagged(path.times(), path.values(), true);
    CHECK(p_variation_norm(flagged, 2.0, true) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p_variation_norm(path, 2.0, true) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("greedy decomposition: one-jump capture and bounds") {
    const auto g = grid8();
    Field2D phi = unit_mode(g);
    phi *= cplx{1.0 / std::sqrt(2.0), 0.0};  // V^2 norm of the indicator = 1
    const SampledPath v({0.0, 1.0}, {phi, Field2D::zero(g, false)});
    CHECK(p_variation_norm(v, 2.0) == doctest::Approx(1.0).epsilon(1e-12));

    const auto levels = greedy_decompose(v, 2.0, 3);
    REQUIRE(levels.size() >= 2);
    CHECK(levels[1].sup_residual <= 0.5 + 1e-12);  // level 1 captures the jump
    CHECK(levels[1].sup_residual == 0.0);

    CHECK_THROWS(greedy_decompose(
        SampledPath({0.0}, {Field2D::zero(g, false)}), 2.0, 3));

    // seeded paths: every level invariant and exact telescoping
    for (std::uint64_t s = 0; s < 10; ++s) {
        for (double p : {1.5, 2.0, 3.0}) {
            SampledPath path = sample_step_path(g, 8 + s % 8, mix_seed(100, s));
            const double vn = p_variation_norm(path, p);
            path *= cplx{1.0 / vn, 0.0};
            const auto ls = greedy_decompose(path, p, 6);
            SampledPath recon(path.times(),
                              std::vector<Field2D>(path.size(), Field2D::zero(g, false)));
            for (const auto& L : ls) {
                CHECK(static_cast<double>(L.partition_count) <=
                      std::pow(2.0, 1.0 + L.level * p) + 1e-9);
                if (L.level >= 1)
                    CHECK(L.sup_step <= std::ldexp(1.0, 1 - L.level) * (1 + 1e-9));
                CHECK(L.sup_residual <= std::ldexp(1.0, -L.level) * (1 + 1e-9));
                if (L.level >= 1) recon += L.step_on_grid;
            }
            recon += ls.back().residual;
            recon -= path;
            CHECK(recon.sup_norm() < 1e-12);
        }
    }
}

TEST_CASE("bilinear form: definition, refinement stability, duality bound") {
    const auto g = grid8();
    const Field2D phi = sample_band_limited_field(g, std::nullopt, 9, false);

    // u = indicator of [a,b): B = <phi, v(b) - v(a)>
    const SampledPath u({0.25, 0.75}, {phi, Field2D::zero(g, false)});
    const SampledPath v = sample_step_path(g, 5, 1234);
    const cplx direct = inner_product(phi, v.eval(0.75) - v.eval(0.25));
    CHECK(std::abs(bilinear_exact(u, v) - direct) < 1e-12);

    // exact stabilization once the partition refines both jump sets
    std::vector<double> pts;
    for (double t : u.times()) pts.push_back(t);
    for (double t : v.times()) pts.push_back(t);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const auto rep = bilinear_form(u, v, Partition::class_z(pts));
    CHECK(rep.increment1 < 1e-13);
    CHECK(rep.increment2 < 1e-13);
    CHECK(std::abs(rep.value - direct) < 1e-12);

    CHECK_THROWS(bilinear_exact(
        u, sample_step_path(FrequencyGrid(16, 16, two_pi, two_pi), 3, 1)));

    // |B| <= upper bracket * V^{p'} on seeded pairs
    for (std::uint64_t s = 0; s < 100; ++s) {
        const SampledPath a = sample_step_path(g, 2 + s % 5, mix_seed(71, s));
        const SampledPath b = sample_step_path(g, 2 + s % 7, mix_seed(72, s));
        const double bound =
            up_norm_bracket(a, 2.0, 0, 0).upper * p_variation_norm(b, 2.0);
        CHECK(std::abs(bilinear_exact(a, b)) <= bound * (1 + 1e-9));
    }
}

TEST_CASE("bilinear form against the classical derivative pairing") {
    // Smooth u(t) = sin^2(pi t) phi on [0,1], step v: the exact value of
    // -int <u', v> is sum_i <phi, v_i>(g(a_i) - g(b_i)) over the plateaus.
    const auto g = grid8();
    const Field2D phi = unit_mode(g);
    const SampledPath v = sample_step_path(g, 4, 99, 0.15, 0.85);

    auto ramp = [](double t) {
        if (t <= 0.0 || t >= 1.0) return 0.0;
        const double s = std::sin(std::numbers::pi * t);
        return s * s;
    };
    auto run_at = [&](std::size_t n) {
        std::vector<double> ts;
        std::vector<Field2D> vals;
        for (std::size_t j = 0; j <= n; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(n);
            ts.push_back(t);
            Field2D f = phi;
            f *= cplx{ramp(t), 0.0};
            vals.push_back(f);
        }
        return bilinear_exact(SampledPath(ts, vals), v);
    };

    // exact -int <u',v> dt: integrate g' against the step values
    cplx exact{0.0, 0.0};
    std::vector<double> knots = v.times();
    knots.insert(knots.begin(), 0.0);
    knots.push_back(1.0);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const cplx val = inner_product(phi, v.eval(0.5 * (knots[i] + knots[i + 1])));
        exact -= val * (ramp(knots[i + 1]) - ramp(knots[i]));
    }

    const double e200 = std::abs(run_at(200) - exact);
    const double e400 = std::abs(run_at(400) - exact);
    // one-sided Riemann-Stieltjes sums converge first order for step v
    CHECK(e200 < 0.1);
    if (e200 > 1e-10) CHECK(e400 < 0.65 * e200);
}

TEST_CASE("U^p bracket: atoms and degenerate input") {
    const auto g = grid8();
    const SampledPath zero({0.0}, {Field2D::zero(g, false)});
    const auto z = up_norm_bracket(zero, 2.0, 8, 3);
    CHECK(z.lower == 0.0);
    CHECK(z.upper == 0.0);

    const double cap = 8.0 / (1.0 - std::pow(2.0, -0.5));
    for (double p : {1.5, 2.0, 3.0}) {
        for (std::uint64_t s = 0; s < 12; ++s) {
            const StepAtom atom = sample_step_atom(g, 1 + s % 8, p, mix_seed(55, s));
            CHECK(atom.is_normalized_atom(p));
            const SampledPath path = atom.to_sampled_path();
            CHECK(p_variation_norm(path, p) <= 2.0 + 1e-9);
            const auto br = up_norm_bracket(path, 2.0 * p, 12, mix_seed(56, s));
            CHECK(br.lower <= 1.0 + 1e-9);
            CHECK(br.lower <= br.upper);
            CHECK(br.upper >= 1.0 - 1e-9);
            CHECK(br.upper <= cap + 1e-9);
        }
    }
}

TEST_CASE("besov seminorm against a direct temporal-spectrum oracle") {
    const auto g = grid8();
    const std::size_t n = 64;
    const auto times = uniform_nodes_periodic(two_pi, n);
    const Field2D phi = unit_mode(g);

    const double M = 8.0;
    std::vector<Field2D> vals;
    for (double t : times) {
        Field2D f = phi;
        f *= std::exp(cplx{0.0, M * t});
        vals.push_back(f);
    }
    const SampledPath osc(times, vals);

    CHECK(besov_seminorm(SampledPath(times, std::vector<Field2D>(n, Field2D::zero(g, false))),
                         0.5, 2.0, q_infinity) == 0.0);

    // oracle: scalar DFT of the tapered oscillation, then the same block
    // aggregation evaluated directly
    const auto w = cosine_taper(n, 1.0);
    const double dt = two_pi / static_cast<double>(n);
    std::vector<cplx> c(n, cplx{0, 0});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            c[k] += w[j] * std::exp(cplx{0.0, M * times[j]}) *
                    std::exp(cplx{0.0, -two_pi * double(j) * double(k) / double(n)}) /
                    double(n);
    auto tau = [&](std::size_t k) {
        const long ks = k < n / 2 ? long(k) : long(k) - long(n);
        return double(ks);  // dtau = 1 at T = 2*pi
    };
    for (double s : {0.0, 0.5}) {
        for (double q : {1.0, 2.0, q_infinity}) {
            double acc = 0.0, sup = 0.0;
            for (const auto& N : resolvable_modulation_blocks(n, dt)) {
                double mass2 = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double m = CutoffFamily::psi(tau(k) / N.value());
                    mass2 += m * m * std::norm(c[k]);
                }
                const double block = std::pow(N.value(), s) * std::sqrt(two_pi * mass2);
                if (q == q_infinity)
                    sup = std::max(sup, block);
                else
                    acc += std::pow(block, q);
            }
            const double oracle = q == q_infinity ? sup : std::pow(acc, 1.0 / q);
            CHECK(besov_seminorm(osc, s, 2.0, q) == doctest::Approx(oracle).epsilon(1e-10));
        }
    }

    // single-block localization: the N = M block carries ~ all the mass
    const double full = besov_seminorm(osc, 0.0, 2.0, q_infinity);
    const double l1 = besov_seminorm(osc, 0.0, 2.0, 1.0);
    CHECK(l1 / full < 1.05);  // neighbours contribute only taper leakage
}

TEST_CASE("xsbq seminorm on a two-band concentrated path") {
    const auto g = FrequencyGrid(16, 16, two_pi, two_pi);
    const std::size_t n = 64;
    const auto times = uniform_nodes_periodic(two_pi, n);
    const double N = 4.0, M = 8.0;
    const Field2D phi = Field2D::single_mode(g, 4, 1, cplx{1.0, 0.0});

    std::vector<Field2D> vals;
    for (double t : times) {
        Field2D f = phi;
        f *= std::exp(cplx{0.0, M * t});
        vals.push_back(free_propagate(f, t));
    }
    const SampledPath u(times, vals);

    CHECK(xsbq_seminorm(SampledPath(times, std::vector<Field2D>(n, Field2D::zero(g, false))),
                        0.0, 1.0, 1.0) == 0.0);

    const auto w = cosine_taper(n, 1.0);
    double tapered2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) tapered2 += w[j] * w[j];
    const double tapered_l2 = std::sqrt(two_pi * tapered2 / static_cast<double>(n));

    for (double s : {-0.5, 0.0, 1.0}) {
        const double got = xsbq_seminorm(u, s, 1.0, 1.0);
        const double expect = std::pow(N, s) * M * tapered_l2;
        CHECK(got == doctest::Approx(expect).epsilon(0.03));
    }
}

TEST_CASE("dyadic space norm brackets") {
    const auto g = FrequencyGrid(16, 16, two_pi, two_pi);
    const std::size_t n = 32;
    const auto times = uniform_nodes_periodic(1.0, n);

    const SampledPath zero(times, std::vector<Field2D>(n, Field2D::zero(g, false)));
    const auto zb = dyadic_space_norm_bracket(zero, -0.5, SpaceKind::Y_dot);
    CHECK(zb.lower == 0.0);
    CHECK(zb.upper == 0.0);

    // single-band free solution with the limit convention: the Y block is
    // exactly the terminal-jump size
    const Field2D phi = Field2D::single_mode(g, 4, 1, cplx{1.0, 0.0});
    std::vector<Field2D> vals;
    for (double t : times) vals.push_back(free_propagate(phi, t));
    const SampledPath path(times, vals, /*constant_before_first=*/true);
    const auto yb = dyadic_space_norm_bracket(path, -0.5, SpaceKind::Y_dot);
    CHECK(yb.lower == doctest::Approx(yb.upper).epsilon(1e-12));
    CHECK(yb.upper == doctest::Approx(std::pow(4.0, -0.5)).epsilon(1e-10));

    for (std::uint64_t s = 0; s < 10; ++s) {
        StepAtom atom = sample_step_atom(g, 3, 2.0, mix_seed(777, s), 0.1, 0.9, true);
        const SampledPath u = atom.sample_onto(times);
        for (auto kind : {SpaceKind::Y_dot, SpaceKind::Z_dot, SpaceKind::X}) {
            const auto br = dyadic_space_norm_bracket(u, -0.5, kind);
            CHECK(br.lower <= br.upper * (1 + 1e-12));
        }
    }
}

TEST_CASE("interpolation bound") {
    const auto r = interpolation_bound(1.0, 1.0, 1.0, 2.0);
    CHECK(r.bound == doctest::Approx(19.541560327111707).epsilon(1e-12));
    CHECK(std::fabs(r.bound - 19.5416) < 1e-3);
    CHECK(r.bound >= r.discrete_min);

    // C_q = C_p: (4 C_p/alpha)(2 alpha + 1)
    const double alpha = 0.25 * std::numbers::ln2;
    const auto e = interpolation_bound(2.0, 2.0, 1.5, 2.0);
    CHECK(e.bound == doctest::Approx(8.0 / alpha * (2.0 * alpha + 1.0)).epsilon(1e-12));

    // nondecreasing in C_q
    double prev = 0.0;
    for (double cq : {1.0, 2.0, 5.0, 50.0}) {
        const double b = interpolation_bound(1.0, cq, 2.0, 3.0).bound;
        CHECK(b >= prev);
        prev = b;
    }

    CHECK_THROWS(interpolation_bound(1.0, 1.0, 2.0, 2.0));
    CHECK_THROWS(interpolation_bound(2.0, 1.0, 1.0, 2.0));
    CHECK_THROWS(interpolation_bound(0.0, 1.0, 1.0, 2.0));
}
