#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "kp2/cli.hpp"
#include "kp2/errors.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/report.hpp"
#include "kp2/rng.hpp"
#include "kp2/run_config.hpp"
#include "kp2/snapshot.hpp"

using namespace kp2;

namespace {
namespace fs = std::filesystem;
constexpr double two_pi = 2.0 * std::numbers::pi;

fs::path temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("kp2_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"kp2"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::dispatch(static_cast<int>(argv.size()), argv.data());
}
}  // namespace

TEST_CASE("config parsing: defaults, overrides, diagnostics") {
    RunConfig c = RunConfig::defaults();
    CHECK(c.grid_nx == 128);

    c.apply("grid.nx", "64");
    CHECK(c.grid_nx == 64);

    CHECK_THROWS_AS(c.apply("grid.nz", "64"), config_error);
    try {
        c.apply("grid.nz", "64", 7);
    } catch (const config_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("grid.nz") != std::string::npos);  // names the key
        CHECK(msg.find("line 7") != std::string::npos);   // and the line
    }

    CHECK_THROWS_AS(c.apply("grid.nx", "63"), config_error);      // odd
    CHECK_THROWS_AS(c.apply("time.T", "-1"), config_error);       // range
    CHECK_THROWS_AS(c.apply("time.nodes", "48"), config_error);   // not 2^k
    CHECK_THROWS_AS(c.apply("solver.quadrature", "euler"), config_error);
    CHECK_THROWS_AS(c.apply("estimate.N1", "3"), config_error);   // not dyadic
    CHECK_THROWS_AS(c.apply("estimate.name", "bogus"), config_error);
    CHECK_THROWS_AS(c.apply("data.kind", "nope"), config_error);
    CHECK_THROWS_AS(c.apply("grid.nx", "abc"), config_error);

    const auto dir = temp_dir("config");
    {
        std::ofstream f(dir / "run.cfg");
        f << "# comment\n\n"
          << "grid.nx = 32\n"
          << "grid.ny=32\n"
          << "pvar.p = 1.5   # trailing comment\n";
    }
    const RunConfig fc = RunConfig::from_file((dir / "run.cfg").string(), {"time.nodes=16"});
    CHECK(fc.grid_nx == 32);
    CHECK(fc.pvar_p == 1.5);
    CHECK(fc.time_nodes == 16);

    {
        std::ofstream f(dir / "bad.cfg");
        f << "grid.nx = 32\nwhat is this\n";
    }
    CHECK_THROWS_AS(RunConfig::from_file((dir / "bad.cfg").string()), config_error);

    CHECK(RunConfig::documentation().find("output.dir") != std::string::npos);
}

TEST_CASE("KP2_OUTPUT_DIR provides the default output directory") {
    setenv("KP2_OUTPUT_DIR", "/tmp/kp2_env_out", 1);
    CHECK(RunConfig::defaults().output_dir == "/tmp/kp2_env_out");
    unsetenv("KP2_OUTPUT_DIR");
    CHECK(RunConfig::defaults().output_dir == "kp2_out");
}

TEST_CASE("snapshot serialization: bit-exact round trips") {
    GaussianStream seeds(7);
    int done = 0;
    for (auto [nx, count] : {std::pair<std::size_t, int>{8, 600},
                             {32, 360},
                             {128, 40}}) {
        const FrequencyGrid g(nx, nx, two_pi, 1.5 * two_pi);
        for (int i = 0; i < count; ++i) {
            const bool real = (i % 2) == 0;
            const Field2D f =
                sample_band_limited_field(g, std::nullopt, seeds.next_uint(), real);
            const double t = seeds.uniform();
            const auto bytes = serialize_field(f, t);
            const Snapshot snap = deserialize_field(bytes);
            CHECK(snap.t == t);
            CHECK(snap.field.coeffs() == f.coeffs());
            CHECK(snap.field.real_flag() == f.real_flag());
            CHECK(serialize_field(snap.field, snap.t) == bytes);  // byte-identical
            ++done;
        }
    }
    CHECK(done == 1000);
}

TEST_CASE("snapshot rejects malformed input") {
    const FrequencyGrid g(8, 8, two_pi, two_pi);
    const Field2D f = sample_band_limited_field(g, std::nullopt, 1, true);
    auto bytes = serialize_field(f, 0.5);

    auto corrupt_magic = bytes;
    corrupt_magic[0] = 'X';
    try {
        deserialize_field(corrupt_magic);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("KP2F") != std::string::npos);
    }

    auto truncated = bytes;
    truncated.resize(truncated.size() - 8);
    CHECK_THROWS(deserialize_field(truncated));

    // big-endian writer fixture: the version field byte-swaps to 2^24
    auto swapped = bytes;
    std::swap(swapped[4], swapped[7]);
    std::swap(swapped[5], swapped[6]);
    try {
        deserialize_field(swapped);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("version") != std::string::npos);
    }

    // invariant violation on read: nonzero xi=0 column
    Field2D bad = f;
    bad.coeffs()[2] = cplx{1.0, 0.0};
    CHECK_THROWS(deserialize_field(serialize_field(bad, 0.0)));
}

TEST_CASE("report emission: headers, round trips, schema checks") {
    const auto dir = temp_dir("report");
    const std::string stem = (dir / "table").string();

    emit_report({}, {"a", "b"}, stem);
    {
        const auto rows = parse_csv(stem + ".csv");
        REQUIRE(rows.size() == 1);  // header only
        CHECK(rows[0] == std::vector<std::string>{"a", "b"});
    }

    GaussianStream rng(3);
    std::vector<ReportRow> rows;
    for (int i = 0; i < 50; ++i)
        rows.push_back({rng.normal() * std::pow(10.0, rng.normal() * 3.0),
                        static_cast<std::int64_t>(i), std::string("s,\"y\"")});
    emit_report(rows, {"x", "i", "label"}, stem);

    const auto parsed = parse_csv(stem + ".csv");
    REQUIRE(parsed.size() == 51);
    for (int i = 0; i < 50; ++i) {
        const double back = std::strtod(parsed[i + 1][0].c_str(), nullptr);
        CHECK(back == std::get<double>(rows[i][0]));  // 17 digits round-trip
        CHECK(parsed[i + 1][2] == "s,\"y\"");
    }

    std::ifstream jl(stem + ".jsonl");
    int lines = 0;
    for (std::string s; std::getline(jl, s);) ++lines;
    CHECK(lines == 50);

    CHECK(fs::exists(stem + "_plot.py"));

    CHECK_THROWS(emit_report({{1.0}}, {"a", "b"}, stem));
}

TEST_CASE("cli dispatch: exit codes and the zero-amplitude run") {
    const auto dir = temp_dir("cli");

    // config error -> exit 2 (and the bad key is named on stderr)
    CHECK(run_cli({"simulate", "--set", "nonsense.key=1"}) == 2);
    CHECK(run_cli({"simulate", "--set", "time.nodes=7"}) == 2);

    // amplitude zero: all-zero snapshots and zero I0 column
    const std::string out = (dir / "zero_run").string();
    CHECK(run_cli({"simulate", "--set", "grid.nx=16", "--set", "grid.ny=16",
                   "--set", "time.nodes=8", "--set", "data.amplitude=0",
                   "--set", std::string("output.dir=") + out}) == 0);
    const auto diag = parse_csv(out + "/diagnostics.csv");
    REQUIRE(diag.size() == 9);
    CHECK(diag[0][3] == "I0");
    for (std::size_t r = 1; r < diag.size(); ++r) CHECK(std::strtod(diag[r][3].c_str(), nullptr) == 0.0);

    // divergence -> exit 3
    CHECK(run_cli({"simulate", "--set", "grid.nx=16", "--set", "grid.ny=16",
                   "--set", "time.nodes=16", "--set", "data.amplitude=50",
                   "--set", "solver.max_iter=10",
                   "--set", std::string("output.dir=") + out}) == 3);

    // decompose over the snapshots written above
    const std::string dec = (dir / "dec").string();
    CHECK(run_cli({"simulate", "--set", "grid.nx=16", "--set", "grid.ny=16",
                   "--set", "time.nodes=8", "--set", "data.amplitude=0.01",
                   "--set", std::string("output.dir=") + out}) == 0);
    CHECK(run_cli({"decompose", "--path", out + "/snapshots",
                   "--set", std::string("output.dir=") + dec,
                   "--set", "pvar.levels=3"}) == 0);
    CHECK(fs::exists(dec + "/decomposition.csv"));
    CHECK(run_cli({"decompose", "--path", dec + "/missing",
                   "--set", std::string("output.dir=") + dec}) == 2);
}

TEST_CASE("simulate supports mode data and file round trips") {
    const auto dir = temp_dir("modes");
    const std::string out = (dir / "m").string();
    CHECK(run_cli({"simulate", "--set", "grid.nx=16", "--set", "grid.ny=16",
                   "--set", "time.nodes=8", "--set", "data.kind=mode",
                   "--set", "data.amplitude=0.001",
                   "--set", std::string("output.dir=") + out}) == 0);

    // reuse the final snapshot as file data
    const std::string out2 = (dir / "m2").string();
    CHECK(run_cli({"simulate", "--set", "grid.nx=16", "--set", "grid.ny=16",
                   "--set", "time.nodes=8", "--set", "data.kind=file",
                   "--set", std::string("data.file=") + out + "/snapshots/snap_0000.kp2f",
                   "--set", std::string("output.dir=") + out2}) == 0);
    CHECK(run_cli({"simulate", "--set", "data.kind=file"}) == 2);  // missing data.file
}
