#include "kp2/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "kp2/conserved.hpp"
#include "kp2/errors.hpp"
#include "kp2/estimates.hpp"
#include "kp2/greedy.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/picard.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/report.hpp"
#include "kp2/run_config.hpp"
#include "kp2/snapshot.hpp"
#include "kp2/verify.hpp"

namespace kp2::cli {

namespace {

namespace fs = std::filesystem;

RunConfig load_config(const std::string& config_path, const std::vector<std::string>& sets) {
    if (config_path.empty()) {
        RunConfig c = RunConfig::defaults();
        for (const auto& s : sets) c.apply_override(s);
        c.validate();
        return c;
    }
    return RunConfig::from_file(config_path, sets);
}

Field2D build_data(const RunConfig& cfg, const FrequencyGrid& grid) {
    if (cfg.data_kind == "gaussian") {
        if (cfg.data_amplitude == 0.0) return Field2D::zero(grid, true);
        return sample_gaussian_data(grid, cfg.data_seed, cfg.data_amplitude);
    }
    if (cfg.data_kind == "mode") {
        Field2D f = Field2D::cosine_mode(grid, 1, 1, cfg.data_amplitude);
        f.apply_dealias();
        return f;
    }
    if (cfg.data_file.empty())
        throw config_error("config error: key 'data.file': required for data.kind=file");
    Snapshot snap = read_snapshot(cfg.data_file);
    if (!snap.field.grid().compatible(grid))
        throw config_error("config error: key 'data.file': snapshot grid does not match grid.*");
    return std::move(snap.field);
}

SolverConfig to_solver_config(const RunConfig& cfg) {
    SolverConfig sc;
    sc.nx = cfg.grid_nx;
    sc.ny = cfg.grid_ny;
    sc.Lx = cfg.domain_Lx;
    sc.Ly = cfg.domain_Ly;
    sc.T = cfg.time_T;
    sc.nodes = cfg.time_nodes;
    sc.tol = cfg.solver_tol;
    sc.max_iter = cfg.solver_max_iter;
    sc.quadrature =
        cfg.solver_quadrature == "trapezoid" ? Quadrature::trapezoid : Quadrature::simpson;
    return sc;
}

int run_simulate(const RunConfig& cfg) {
    const FrequencyGrid grid(cfg.grid_nx, cfg.grid_ny, cfg.domain_Lx, cfg.domain_Ly);
    const Field2D u0 = build_data(cfg, grid);
    const SolverConfig sc = to_solver_config(cfg);

    SampledPath path(sc.node_times(),
                     std::vector<Field2D>(sc.nodes, Field2D::zero(grid, true)));
    SolutionDiagnostics diag;
    if (u0.l2_norm() == 0.0) {
        // Zero data: the solution is identically zero; nothing to iterate.
        diag.converged = true;
        diag.I0_series.assign(sc.nodes, 0.0);
        diag.I1_series.assign(sc.nodes, 0.0);
        diag.scattering_increments.assign(3, 0.0);
    } else {
        auto [p, d] = picard_solve(u0, sc);
        path = std::move(p);
        diag = std::move(d);
    }

    const fs::path out(cfg.output_dir);
    fs::create_directories(out / "snapshots");
    for (std::size_t j = 0; j < path.size(); ++j) {
        char name[32];
        std::snprintf(name, sizeof name, "snap_%04zu.kp2f", j);
        write_snapshot((out / "snapshots" / name).string(), path.value(j), path.times()[j]);
    }

    // One row per time node (or per iteration when there are more);
    // series shorter than the row count pad with zeros.
    std::vector<ReportRow> rows;
    const std::size_t n_rows = std::max(path.size(), diag.residuals.size());
    for (std::size_t j = 0; j < n_rows; ++j) {
        rows.push_back({static_cast<std::int64_t>(j),
                        j < diag.residuals.size() ? diag.residuals[j] : 0.0,
                        j < diag.contraction_ratios.size() ? diag.contraction_ratios[j] : 0.0,
                        j < diag.I0_series.size() ? diag.I0_series[j] : 0.0,
                        j < diag.I1_series.size() ? diag.I1_series[j] : 0.0});
    }
    emit_report(rows, {"iter", "residual", "rho", "I0", "I1"},
                (out / "diagnostics").string());

    std::vector<ReportRow> summary;
    summary.push_back({std::string("iterations"), static_cast<double>(diag.iterations)});
    summary.push_back({std::string("fixed_point_residual"), diag.fixed_point_residual});
    summary.push_back({std::string("data_critical_norm"), diag.data_critical_norm});
    summary.push_back({std::string("z_bracket_lower"), diag.z_bracket.lower});
    summary.push_back({std::string("z_bracket_upper"), diag.z_bracket.upper});
    for (std::size_t i = 0; i < diag.scattering_increments.size(); ++i)
        summary.push_back({"scattering_increment_" + std::to_string(i),
                           diag.scattering_increments[i]});
    emit_report(summary, {"key", "value"}, (out / "summary").string());

    std::cout << "simulate: wrote " << path.size() << " snapshots and diagnostics to "
              << out.string() << "\n";
    return 0;
}

int run_estimate_cmd(const RunConfig& cfg) {
    EstimateSpec spec;
    spec.name = estimate_name_from_string(cfg.estimate_name);
    spec.nx = cfg.grid_nx;
    spec.ny = cfg.grid_ny;
    spec.Lx = cfg.domain_Lx;
    spec.Ly = cfg.domain_Ly;
    spec.T = cfg.time_T;
    spec.nodes = cfg.time_nodes;
    spec.trials = cfg.estimate_trials;
    spec.base_seed = cfg.data_seed;
    spec.N1 = DyadicIndex::from_value(cfg.estimate_N1);
    spec.N2 = DyadicIndex::from_value(cfg.estimate_N2);
    spec.M = DyadicIndex::from_value(cfg.estimate_M);
    try {
        spec.validate();
    } catch (const std::exception& e) {
        throw config_error(std::string("config error: estimate.*: ") + e.what());
    }

    const EstimateReport rep = run_estimate(spec);

    const fs::path out(cfg.output_dir);
    fs::create_directories(out);
    std::vector<ReportRow> rows;
    for (std::size_t i = 0; i < rep.trials.size(); ++i) {
        const auto& t = rep.trials[i];
        rows.push_back({static_cast<std::int64_t>(i),
                        static_cast<std::int64_t>(t.seed), t.numerator, t.denominator,
                        t.ratio});
    }
    emit_report(rows, {"trial", "seed", "numerator", "denominator", "ratio"},
                (out / "report").string());

    std::vector<ReportRow> summary{
        {std::string("estimate"), to_string(rep.spec.name)},
        {std::string("observed_constant_max"), format_double_17(rep.max_ratio)},
        {std::string("mean_ratio"), format_double_17(rep.mean_ratio)},
        {std::string("q50"), format_double_17(rep.q50)},
        {std::string("q90"), format_double_17(rep.q90)},
        {std::string("q99"), format_double_17(rep.q99)},
        {std::string("denominator_side"), rep.denominator_side},
        {std::string("window_length"), format_double_17(rep.window_length)},
    };
    emit_report(summary, {"key", "value"}, (out / "report_summary").string());

    std::cout << "estimate " << to_string(rep.spec.name) << ": observed constant "
              << format_double_17(rep.max_ratio) << " over " << rep.trials.size()
              << " trials\n";
    return 0;
}

int run_decompose(const RunConfig& cfg, const std::string& path_dir_flag) {
    fs::path dir = path_dir_flag.empty()
                       ? (cfg.data_file.empty() ? fs::path(cfg.output_dir) / "snapshots"
                                                : fs::path(cfg.data_file))
                       : fs::path(path_dir_flag);
    if (!fs::is_directory(dir))
        throw config_error("config error: decompose input is not a directory: " + dir.string());

    std::vector<Snapshot> snaps;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".kp2f") snaps.push_back(read_snapshot(entry.path().string()));
    }
    if (snaps.empty())
        throw config_error("config error: no .kp2f snapshots in " + dir.string());
    std::sort(snaps.begin(), snaps.end(),
              [](const Snapshot& a, const Snapshot& b) { return a.t < b.t; });
    std::vector<double> times;
    std::vector<Field2D> vals;
    for (auto& s : snaps) {
        times.push_back(s.t);
        vals.push_back(std::move(s.field));
    }
    const SampledPath path(std::move(times), std::move(vals));

    const double vp = p_variation_norm(path, cfg.pvar_p);
    const double vps = p_variation_norm(path, cfg.pvar_p, /*twist=*/true);

    const fs::path out(cfg.output_dir);
    fs::create_directories(out);

    std::vector<ReportRow> rows;
    if (vp > 0.0) {
        const auto levels = greedy_decompose(path, cfg.pvar_p, cfg.pvar_levels);
        for (const auto& L : levels)
            rows.push_back({static_cast<std::int64_t>(L.level),
                            static_cast<std::int64_t>(L.partition_count), L.sup_step,
                            L.sup_residual});
    }
    emit_report(rows, {"level", "partition_count", "sup_step", "sup_residual"},
                (out / "decomposition").string());

    std::vector<ReportRow> summary{
        {std::string("samples"), static_cast<std::int64_t>(path.size())},
        {std::string("p"), cfg.pvar_p},
        {std::string("p_variation"), vp},
        {std::string("p_variation_twisted"), vps},
    };
    emit_report(summary, {"key", "value"}, (out / "decomposition_summary").string());

    std::cout << "decompose: " << path.size() << " samples, ||v||_{V^p} = "
              << format_double_17(vp) << ", ||v||_{V^p_S} = " << format_double_17(vps)
              << "\n";
    return 0;
}

int run_verify(const RunConfig& cfg, bool full) {
    const auto scale = full ? verify::Scale::full() : verify::Scale::reduced();
    const auto results = verify::run_all(scale, cfg.output_dir);
    for (const auto& r : results) {
        std::printf("[%s] %02d %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
    }
    const bool ok = verify::all_passed(results);
    std::printf("verify: %zu/%zu criteria passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.pass; })),
                results.size());
    return ok ? 0 : 1;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"kp2: a spectral laboratory for the KP-II equation at critical regularity"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    std::string path_dir;
    bool full = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value configuration file");
        sub->add_option("--set", sets, "override, e.g. --set grid.nx=64")->take_all();
    };

    CLI::App* sim = app.add_subcommand("simulate", "small-data Cauchy solve with diagnostics");
    add_common(sim);
    CLI::App* est = app.add_subcommand("estimate", "Monte Carlo estimate of one inequality");
    add_common(est);
    CLI::App* dec = app.add_subcommand("decompose",
                                       "p-variation norm and greedy decomposition of a stored path");
    add_common(dec);
    dec->add_option("--path", path_dir, "directory of .kp2f snapshots");
    CLI::App* ver = app.add_subcommand("verify", "run the invariant suite, exit 0 iff all pass");
    add_common(ver);
    ver->add_flag("--full", full, "acceptance-scale trial counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const RunConfig cfg = load_config(config_path, sets);
        if (sim->parsed()) return run_simulate(cfg);
        if (est->parsed()) return run_estimate_cmd(cfg);
        if (dec->parsed()) return run_decompose(cfg, path_dir);
        if (ver->parsed()) return run_verify(cfg, full);
        return 2;
    } catch (const config_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const divergence_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace kp2::cli
