// Timing comparison of the OpenMP kernels against their serial reference
// implementations. Run manually:
//
//   ./bench_kernels [K] [N]
//
// TORUSCT_THREADS caps the parallel variant.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "torusct/kernels.hpp"
#include "torusct/random.hpp"

using namespace torusct;

namespace {

template <typename F>
double time_ms(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    const int K = argc > 1 ? std::atoi(argv[1]) : 8;
    const int N = argc > 2 ? std::atoi(argv[2]) : 192;
    const FreqBox box(2, K);
    const Spectrum f = random_spectrum(box, 1);

    std::printf("n=2  K=%d  (%zu coefficients)  grid %dx%d  threads=%d\n", K, box.size(), N, N,
                kernels::planned_threads());
    std::printf("%-14s %12s %12s %9s %10s\n", "kernel", "serial[ms]", "parallel[ms]", "speedup",
                "max|diff|");

    std::vector<kernels::cplx> grid_serial, grid_parallel;
    const double t_ss = time_ms([&] { grid_serial = kernels::synth_grid_serial(box, f.coeffs(), N); });
    const double t_sp = time_ms([&] { grid_parallel = kernels::synth_grid(box, f.coeffs(), N); });
    double diff = 0.0;
    for (std::size_t i = 0; i < grid_serial.size(); ++i)
        diff = std::max(diff, std::abs(grid_serial[i] - grid_parallel[i]));
    std::printf("%-14s %12.2f %12.2f %8.2fx %10.2e\n", "synth_grid", t_ss, t_sp, t_ss / t_sp, diff);

    std::vector<kernels::cplx> co_serial, co_parallel;
    const double t_as = time_ms([&] { co_serial = kernels::analyze_grid_serial(box, grid_serial, N); });
    const double t_ap = time_ms([&] { co_parallel = kernels::analyze_grid(box, grid_serial, N); });
    diff = 0.0;
    for (std::size_t i = 0; i < co_serial.size(); ++i)
        diff = std::max(diff, std::abs(co_serial[i] - co_parallel[i]));
    std::printf("%-14s %12.2f %12.2f %8.2fx %10.2e\n", "analyze_grid", t_as, t_ap, t_as / t_ap, diff);

    Rng rng(2);
    std::vector<double> points(2 * 100000);
    for (auto& p : points) p = rng.uniform();
    std::vector<kernels::cplx> pt_serial, pt_parallel;
    const double t_ps = time_ms([&] { pt_serial = kernels::synth_points_serial(box, f.coeffs(), points); });
    const double t_pp = time_ms([&] { pt_parallel = kernels::synth_points(box, f.coeffs(), points); });
    diff = 0.0;
    for (std::size_t i = 0; i < pt_serial.size(); ++i)
        diff = std::max(diff, std::abs(pt_serial[i] - pt_parallel[i]));
    std::printf("%-14s %12.2f %12.2f %8.2fx %10.2e\n", "synth_points", t_ps, t_pp, t_ps / t_pp, diff);
    return 0;
}
