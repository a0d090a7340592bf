#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kp2::verify {

// Trial counts and grid sizes for the invariant suite. full() pins the
// acceptance-scale numbers; reduced() is the fast hermetic profile the
// `verify` subcommand runs.
struct Scale {
    std::size_t pvar_paths = 500;
    std::size_t decomp_paths = 100;
    std::size_t atoms = 100;
    std::size_t duality_pairs = 10000;
    std::size_t resonance_triples = 10000;
    std::size_t unitary_fields = 100;
    std::size_t unitary_times = 10;
    std::size_t strichartz_grid = 64;
    std::size_t strichartz_trials_lo = 1000;
    std::size_t strichartz_trials_hi = 10000;
    std::size_t scale_invariance_trials = 20;
    std::size_t bilinear_grid = 128;
    std::size_t bilinear_trials = 200;
    int bilinear_n2_max_exponent = 6;  // ratios 2 .. 2^max
    std::size_t modulation_trials = 80;
    std::size_t solver_grid = 128;
    std::size_t solver_nodes = 64;
    std::size_t commutation_grid = 64;
    std::size_t commutation_nodes = 32;
    std::size_t interpolation_samples = 200;
    std::uint64_t base_seed = 20240801;

    static Scale full();
    static Scale reduced();
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;   // deterministic metrics only (reports stay bit-identical)
    double seconds = 0.0; // wall time, reported to the console, never to files
};

// Runs criteria 1..14; when output_dir is nonempty, writes
// verify_report.{csv,jsonl} and the plot script there.
std::vector<CriterionResult> run_all(const Scale& scale, const std::string& output_dir);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace kp2::verify
