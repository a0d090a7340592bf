#pragma once

#include <cstdint>
#include <random>

namespace kp2 {

// Trial seeds are derived as mix(base_seed, i): parallel trial loops stay
// reproducible regardless of scheduling.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

// Deterministic Gaussian source: mt19937_64 (bit-exact per the standard)
// plus an explicit Box-Muller transform, so replays are exact across
// platforms and library versions.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

    double uniform();           // in (0,1]
    double normal();
    std::uint64_t next_uint() { return eng_(); }
    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace kp2
