#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace kp2::fft {

using cplx = std::complex<double>;

// Unnormalized complex-to-complex transforms (FFTW layout, row-major).
// Plans are cached per shape behind a mutex; execution on caller-owned
// buffers is thread-safe. Plans use FFTW_ESTIMATE so the chosen algorithm,
// and therefore the rounding, is identical from run to run.
void forward_2d(std::size_t n0, std::size_t n1, const cplx* in, cplx* out);
void backward_2d(std::size_t n0, std::size_t n1, const cplx* in, cplx* out);

// 1-D transforms along a contiguous array of length n.
void forward_1d(std::size_t n, const cplx* in, cplx* out);
void backward_1d(std::size_t n, const cplx* in, cplx* out);

}  // namespace kp2::fft
