#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kp2/errors.hpp"

namespace kp2 {

// Flat key=value configuration. Unknown keys are rejected, every numeric
// key is range-checked, and all diagnostics name the offending key (and
// line, when read from a file).
struct RunConfig {
    std::size_t grid_nx = 128;
    std::size_t grid_ny = 128;
    double domain_Lx = 6.283185307179586476925286766559;
    double domain_Ly = 6.283185307179586476925286766559;
    double time_T = 1.0;
    std::size_t time_nodes = 64;
    double solver_tol = 1e-9;
    std::size_t solver_max_iter = 25;
    std::string solver_quadrature = "simpson";  // or "trapezoid"
    std::string data_kind = "gaussian";         // gaussian | mode | file
    double data_amplitude = 0.01;
    std::uint64_t data_seed = 1;
    std::string data_file;                      // snapshot (or snapshot dir) for kind=file
    std::string estimate_name = "l4_strichartz";
    std::size_t estimate_trials = 1000;
    double estimate_N1 = 1.0;                   // dyadic values
    double estimate_N2 = 8.0;
    double estimate_M = 4.0;
    double pvar_p = 2.0;
    int pvar_levels = 6;
    std::string output_dir = "kp2_out";         // default from KP2_OUTPUT_DIR when set

    // Applies one "key=value" assignment; throws config_error naming the key.
    void apply(const std::string& key, const std::string& value, int line = -1);
    void validate() const;

    static RunConfig defaults();  // honors KP2_OUTPUT_DIR
    static RunConfig from_file(const std::string& path,
                               const std::vector<std::string>& overrides = {});
    // Parses overrides of the form "key=value".
    void apply_override(const std::string& assignment);

    // One line per key: name, default, range.
    static std::string documentation();
};

}  // namespace kp2
