// Acceptance sweep: every criterion of the lab's exit checklist at full
// scale, one pass/fail line each, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "kp2/verify.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int failures = 0;

    const auto results = kp2::verify::run_all(kp2::verify::Scale::full(), "");
    for (const auto& r : results) {
        std::printf("[%s] criterion %02d: %s - %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        if (!r.pass) ++failures;
    }

    // criterion 15: the hermetic verify profile - all criteria pass at
    // reduced counts, within budget, with bit-identical reports across
    // two consecutive runs.
    {
        const auto t0 = clock::now();
        const fs::path dir1 = fs::temp_directory_path() / "kp2_accept_verify_a";
        const fs::path dir2 = fs::temp_directory_path() / "kp2_accept_verify_b";
        fs::remove_all(dir1);
        fs::remove_all(dir2);
        const auto a = kp2::verify::run_all(kp2::verify::Scale::reduced(), dir1.string());
        const auto b = kp2::verify::run_all(kp2::verify::Scale::reduced(), dir2.string());
        const double secs = std::chrono::duration<double>(clock::now() - t0).count() / 2.0;

        const bool pass_a = kp2::verify::all_passed(a);
        const bool pass_b = kp2::verify::all_passed(b);
        const bool csv_same =
            slurp(dir1 / "verify_report.csv") == slurp(dir2 / "verify_report.csv");
        const bool jsonl_same =
            slurp(dir1 / "verify_report.jsonl") == slurp(dir2 / "verify_report.jsonl");
        const bool in_budget = secs < 600.0;
        const bool pass = pass_a && pass_b && csv_same && jsonl_same && in_budget;
        std::printf("[%s] criterion 15: hermetic verify - exit %s, reports %s, %.1fs per run\n",
                    pass ? "PASS" : "FAIL", pass_a && pass_b ? "0" : "nonzero",
                    csv_same && jsonl_same ? "bit-identical" : "DIFFER", secs);
        if (!pass) ++failures;
    }

    std::printf("acceptance: %d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
