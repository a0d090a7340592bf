#include "kp2/fft_engine.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace kp2::fft {

namespace {

// FFTW planner calls are not thread-safe; plan creation is serialized.
// fftw_execute_dft on distinct buffers is safe. FFTW_UNALIGNED lets one
// plan serve arbitrarily aligned caller buffers.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

using key2d = std::tuple<std::size_t, std::size_t, int>;
using key1d = std::tuple<std::size_t, int>;

fftw_plan plan_2d(std::size_t n0, std::size_t n1, int sign) {
    static std::map<key2d, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto it = cache.find({n0, n1, sign});
    if (it != cache.end()) return it->second;
    std::vector<cplx> tmp(n0 * n1);
    fftw_plan p = fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key2d{n0, n1, sign}, p);
    return p;
}

fftw_plan plan_1d(std::size_t n, int sign) {
    static std::map<key1d, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto it = cache.find({n, sign});
    if (it != cache.end()) return it->second;
    std::vector<cplx> tmp(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key1d{n, sign}, p);
    return p;
}

void exec(fftw_plan p, const cplx* in, cplx* out) {
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void forward_2d(std::size_t n0, std::size_t n1, const cplx* in, cplx* out) {
    exec(plan_2d(n0, n1, FFTW_FORWARD), in, out);
}

void backward_2d(std::size_t n0, std::size_t n1, const cplx* in, cplx* out) {
    exec(plan_2d(n0, n1, FFTW_BACKWARD), in, out);
}

void forward_1d(std::size_t n, const cplx* in, cplx* out) {
    exec(plan_1d(n, FFTW_FORWARD), in, out);
}

void backward_1d(std::size_t n, const cplx* in, cplx* out) {
    exec(plan_1d(n, FFTW_BACKWARD), in, out);
}

}  // namespace kp2::fft
