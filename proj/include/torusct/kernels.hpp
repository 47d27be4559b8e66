#pragma once

#include <complex>
#include <span>
#include <vector>

#include "torusct/freq_box.hpp"

namespace torusct::kernels {

using cplx = std::complex<double>;

/// Number of threads the parallel kernels will use. Honors the
/// TORUSCT_THREADS environment variable as an upper cap; 1 when the
/// build has no OpenMP support.
int planned_threads();

// Each kernel is a pure per-element map, so the parallel variant is
// bitwise identical to the serial one for any thread count. The *_serial
// twins are the reference implementations the tests compare against.

/// Samples of the trigonometric polynomial with coefficients `coeffs`
/// (dense over `box`) on the uniform grid j/N, j in {0..N-1}^n, listed
/// lexicographically on (j_1, ..., j_n).
std::vector<cplx> synth_grid(const FreqBox& box, std::span<const cplx> coeffs, int N);
std::vector<cplx> synth_grid_serial(const FreqBox& box, std::span<const cplx> coeffs, int N);

/// Evaluation at arbitrary points. `points` holds n coordinates per
/// point, flattened; coordinates are taken mod 1.
std::vector<cplx> synth_points(const FreqBox& box, std::span<const cplx> coeffs,
                               std::span<const double> points);
std::vector<cplx> synth_points_serial(const FreqBox& box, std::span<const cplx> coeffs,
                                      std::span<const double> points);

/// Discrete Fourier analysis of grid samples back onto the box:
/// out[k] = N^{-n} sum_j samples[j] e^{-2 pi i k . j / N}. Exact inverse
/// of synth_grid whenever N > 2K.
std::vector<cplx> analyze_grid(const FreqBox& box, std::span<const cplx> samples, int N);
std::vector<cplx> analyze_grid_serial(const FreqBox& box, std::span<const cplx> samples, int N);

} // namespace torusct::kernels
