#include "kp2/rng.hpp"

#include <cmath>
#include <numbers>

namespace kp2 {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 over base xor a stream-spread constant
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double GaussianStream::uniform() {
    // 53-bit mantissa, mapped to (0,1]
    const std::uint64_t r = eng_() >> 11;
    return (static_cast<double>(r) + 1.0) * 0x1.0p-53;
}

double GaussianStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t GaussianStream::below(std::uint64_t n) {
    // Modulo bias is irrelevant at these ranges (n << 2^64).
    return eng_() % n;
}

}  // namespace kp2
