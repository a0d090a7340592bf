#include "kp2/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kp2/cutoffs.hpp"
#include "kp2/estimates.hpp"

namespace kp2 {

namespace {

[[noreturn]] void fail(const std::string& key, int line, const std::string& msg) {
    std::ostringstream os;
    os << "config error";
    if (line >= 0) os << " (line " << line << ")";
    os << ": key '" << key << "': " << msg;
    throw config_error(os.str());
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) fail(key, line, "trailing characters in numeric value '" + v + "'");
        return d;
    } catch (const config_error&) {
        throw;
    } catch (...) {
        fail(key, line, "not a number: '" + v + "'");
    }
}

std::uint64_t parse_uint(const std::string& key, const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const long long d = std::stoll(v, &pos);
        if (pos != v.size() || d < 0) fail(key, line, "not a nonnegative integer: '" + v + "'");
        return static_cast<std::uint64_t>(d);
    } catch (const config_error&) {
        throw;
    } catch (...) {
        fail(key, line, "not a nonnegative integer: '" + v + "'");
    }
}

bool is_pow2(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

void RunConfig::apply(const std::string& key, const std::string& value, int line) {
    const std::string v = trim(value);
    if (key == "grid.nx") {
        grid_nx = parse_uint(key, v, line);
        if (grid_nx < 4 || grid_nx % 2 != 0 || grid_nx > 4096)
            fail(key, line, "must be even, in [4, 4096]");
    } else if (key == "grid.ny") {
        grid_ny = parse_uint(key, v, line);
        if (grid_ny < 4 || grid_ny % 2 != 0 || grid_ny > 4096)
            fail(key, line, "must be even, in [4, 4096]");
    } else if (key == "domain.Lx") {
        domain_Lx = parse_double(key, v, line);
        if (!(domain_Lx > 0.0)) fail(key, line, "must be positive");
    } else if (key == "domain.Ly") {
        domain_Ly = parse_double(key, v, line);
        if (!(domain_Ly > 0.0)) fail(key, line, "must be positive");
    } else if (key == "time.T") {
        time_T = parse_double(key, v, line);
        if (!(time_T > 0.0)) fail(key, line, "must be positive");
    } else if (key == "time.nodes") {
        time_nodes = parse_uint(key, v, line);
        if (time_nodes < 8 || !is_pow2(time_nodes) || time_nodes > 65536)
            fail(key, line, "must be a power of two in [8, 65536]");
    } else if (key == "solver.tol") {
        solver_tol = parse_double(key, v, line);
        if (!(solver_tol > 0.0)) fail(key, line, "must be positive");
    } else if (key == "solver.max_iter") {
        solver_max_iter = parse_uint(key, v, line);
        if (solver_max_iter < 1 || solver_max_iter > 10000) fail(key, line, "must be in [1, 10000]");
    } else if (key == "solver.quadrature") {
        if (v != "trapezoid" && v != "simpson")
            fail(key, line, "must be 'trapezoid' or 'simpson'");
        solver_quadrature = v;
    } else if (key == "data.kind") {
        if (v != "gaussian" && v != "mode" && v != "file")
            fail(key, line, "must be 'gaussian', 'mode' or 'file'");
        data_kind = v;
    } else if (key == "data.amplitude") {
        data_amplitude = parse_double(key, v, line);
        if (!(data_amplitude >= 0.0)) fail(key, line, "must be >= 0");
    } else if (key == "data.seed") {
        data_seed = parse_uint(key, v, line);
    } else if (key == "data.file") {
        data_file = v;
    } else if (key == "estimate.name") {
        try {
            estimate_name_from_string(v);
        } catch (const std::exception& e) {
            fail(key, line, e.what());
        }
        estimate_name = v;
    } else if (key == "estimate.trials") {
        estimate_trials = parse_uint(key, v, line);
        if (estimate_trials < 1 || estimate_trials > 10000000)
            fail(key, line, "must be in [1, 1e7]");
    } else if (key == "estimate.N1" || key == "estimate.N2" || key == "estimate.M") {
        const double d = parse_double(key, v, line);
        try {
            DyadicIndex::from_value(d);
        } catch (const std::exception&) {
            fail(key, line, "must be a positive power of two");
        }
        if (key == "estimate.N1") estimate_N1 = d;
        else if (key == "estimate.N2") estimate_N2 = d;
        else estimate_M = d;
    } else if (key == "pvar.p") {
        pvar_p = parse_double(key, v, line);
        if (!(pvar_p >= 1.0)) fail(key, line, "must be >= 1");
    } else if (key == "pvar.levels") {
        const std::uint64_t n = parse_uint(key, v, line);
        if (n > 24) fail(key, line, "must be in [0, 24]");
        pvar_levels = static_cast<int>(n);
    } else if (key == "output.dir") {
        if (v.empty()) fail(key, line, "must not be empty");
        output_dir = v;
    } else {
        fail(key, line, "unknown key");
    }
}

void RunConfig::validate() const {
    if (time_nodes < 8) throw config_error("config error: time.nodes too small");
}

RunConfig RunConfig::defaults() {
    RunConfig c;
    if (const char* env = std::getenv("KP2_OUTPUT_DIR"); env && *env) c.output_dir = env;
    return c;
}

RunConfig RunConfig::from_file(const std::string& path, const std::vector<std::string>& overrides) {
    RunConfig c = defaults();
    std::ifstream in(path);
    if (!in) throw config_error("config error: cannot open '" + path + "'");
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "config error (line " << line << "): expected key=value, got '" << s << "'";
            throw config_error(os.str());
        }
        c.apply(trim(s.substr(0, eq)), s.substr(eq + 1), line);
    }
    for (const auto& o : overrides) c.apply_override(o);
    c.validate();
    return c;
}

void RunConfig::apply_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("config error: override must be key=value, got '" + assignment + "'");
    apply(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

std::string RunConfig::documentation() {
    return
        "grid.nx            even integer in [4,4096]        default 128\n"
        "grid.ny            even integer in [4,4096]        default 128\n"
        "domain.Lx          positive real                    default 2*pi\n"
        "domain.Ly          positive real                    default 2*pi\n"
        "time.T             positive real (horizon)          default 1.0\n"
        "time.nodes         power of two in [8,65536]        default 64\n"
        "solver.tol         positive real                    default 1e-9\n"
        "solver.max_iter    integer in [1,10000]             default 25\n"
        "solver.quadrature  trapezoid | simpson              default simpson\n"
        "data.kind          gaussian | mode | file           default gaussian\n"
        "data.amplitude     real >= 0                        default 0.01\n"
        "data.seed          nonnegative integer              default 1\n"
        "data.file          path (for data.kind=file)        default empty\n"
        "estimate.name      l4_strichartz | local_smoothing | bilinear_N1N2 |\n"
        "                   bilinear_interpolated | modulation_decay | besov_embedding\n"
        "estimate.trials    integer in [1,1e7]               default 1000\n"
        "estimate.N1        positive power of two            default 1\n"
        "estimate.N2        positive power of two            default 8\n"
        "estimate.M         positive power of two            default 4\n"
        "pvar.p             real >= 1                        default 2\n"
        "pvar.levels        integer in [0,24]                default 6\n"
        "output.dir         directory (env KP2_OUTPUT_DIR)   default kp2_out\n";
}

}  // namespace kp2
