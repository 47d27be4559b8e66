#include "torusct/kernels.hpp"

#include <cstdlib>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torusct::kernels {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// e^{2 pi i k x} for k = -K..K, built from one sincos pair.
void axis_phases(double x, int K, cplx* out /* 2K+1 entries */) {
    const cplx step{std::cos(two_pi * x), std::sin(two_pi * x)};
    out[K] = cplx{1.0, 0.0};
    for (int k = 1; k <= K; ++k) {
        out[K + k] = out[K + k - 1] * step;
        out[K - k] = std::conj(out[K + k]);
    }
}

// sum over the box of coeffs[k] * prod_i phase_rows[i][k_i + K],
// walking the box lexicographically with a partial-product stack.
cplx contract(const FreqBox& box, std::span<const cplx> coeffs, const cplx* const* phase_rows) {
    const int n = box.n();
    const int side = box.side();
    std::vector<int> digit(n, 0);
    std::vector<cplx> partial(n + 1);
    partial[0] = cplx{1.0, 0.0};
    for (int i = 0; i < n; ++i) partial[i + 1] = partial[i] * phase_rows[i][0];
    cplx acc{0.0, 0.0};
    const std::size_t total = box.size();
    for (std::size_t idx = 0;;) {
        acc += coeffs[idx] * partial[n];
        if (++idx == total) break;
        int axis = n - 1;
        while (digit[axis] == side - 1) {
            digit[axis] = 0;
            --axis;
        }
        ++digit[axis];
        for (int i = axis; i < n; ++i) partial[i + 1] = partial[i] * phase_rows[i][digit[i]];
    }
    return acc;
}

cplx point_value(const FreqBox& box, std::span<const cplx> coeffs, const double* coords,
                 std::vector<cplx>& scratch, std::vector<const cplx*>& rows) {
    const int n = box.n();
    const int side = box.side();
    scratch.resize(static_cast<std::size_t>(n) * side);
    rows.resize(n);
    for (int i = 0; i < n; ++i) {
        axis_phases(coords[i], box.K(), scratch.data() + static_cast<std::size_t>(i) * side);
        rows[i] = scratch.data() + static_cast<std::size_t>(i) * side;
    }
    return contract(box, coeffs, rows.data());
}

// grid index j (lexicographic) -> per-axis digits
void grid_digits(std::size_t j, int n, int N, int* out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(j % N);
        j /= N;
    }
}

std::size_t pow_size(int N, int n) {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(N);
    return s;
}

// table[i][j*side + (k+K)] = e^{2 pi i k j / N}
std::vector<std::vector<cplx>> build_grid_table(const FreqBox& box, int N) {
    std::vector<std::vector<cplx>> table(box.n());
    for (int i = 0; i < box.n(); ++i) {
        table[i].resize(static_cast<std::size_t>(N) * box.side());
        for (int j = 0; j < N; ++j)
            axis_phases(static_cast<double>(j) / N, box.K(),
                        table[i].data() + static_cast<std::size_t>(j) * box.side());
    }
    return table;
}

cplx synth_grid_one(const FreqBox& box, std::span<const cplx> coeffs, int N,
                    const std::vector<std::vector<cplx>>& table, std::size_t j,
                    std::vector<int>& digits, std::vector<const cplx*>& rows) {
    digits.resize(box.n());
    rows.resize(box.n());
    grid_digits(j, box.n(), N, digits.data());
    for (int i = 0; i < box.n(); ++i)
        rows[i] = table[i].data() + static_cast<std::size_t>(digits[i]) * box.side();
    return contract(box, coeffs, rows.data());
}

cplx analyze_one(const FreqBox& box, std::span<const cplx> samples, int N,
                 const std::vector<cplx>& conj_row, std::size_t k_index,
                 std::vector<int>& kmod, std::vector<int>& digits) {
    const int n = box.n();
    const FreqVec k = box.freq_at(k_index);
    kmod.resize(n);
    digits.resize(n);
    for (int i = 0; i < n; ++i) kmod[i] = ((k[i] % N) + N) % N;
    cplx acc{0.0, 0.0};
    const std::size_t total = samples.size();
    for (std::size_t j = 0; j < total; ++j) {
        grid_digits(j, n, N, digits.data());
        cplx phase{1.0, 0.0};
        for (int i = 0; i < n; ++i)
            phase *= conj_row[static_cast<std::size_t>(digits[i]) * kmod[i] % N];
        acc += samples[j] * phase;
    }
    return acc / static_cast<double>(total);
}

// conj_row[m] = e^{-2 pi i m / N}; exponents are combined mod N
std::vector<cplx> build_conj_row(int N) {
    std::vector<cplx> row(N);
    for (int m = 0; m < N; ++m) {
        const double ang = -two_pi * static_cast<double>(m) / N;
        row[m] = cplx{std::cos(ang), std::sin(ang)};
    }
    return row;
}

} // namespace

int planned_threads() {
#ifdef _OPENMP
    int t = omp_get_max_threads();
    if (const char* env = std::getenv("TORUSCT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < t) t = cap;
    }
    return t;
#else
    return 1;
#endif
}

std::vector<cplx> synth_grid_serial(const FreqBox& box, std::span<const cplx> coeffs, int N) {
    if (N < 1) throw std::invalid_argument("synth_grid: N must be >= 1");
    const std::size_t total = pow_size(N, box.n());
    const auto table = build_grid_table(box, N);
    std::vector<cplx> out(total);
    std::vector<int> digits;
    std::vector<const cplx*> rows;
    for (std::size_t j = 0; j < total; ++j)
        out[j] = synth_grid_one(box, coeffs, N, table, j, digits, rows);
    return out;
}

std::vector<cplx> synth_grid(const FreqBox& box, std::span<const cplx> coeffs, int N) {
    if (N < 1) throw std::invalid_argument("synth_grid: N must be >= 1");
    const std::size_t total = pow_size(N, box.n());
    const auto table = build_grid_table(box, N);
    std::vector<cplx> out(total);
#ifdef _OPENMP
#pragma omp parallel num_threads(planned_threads())
    {
        std::vector<int> digits;
        std::vector<const cplx*> rows;
#pragma omp for schedule(static)
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(total); ++j)
            out[j] = synth_grid_one(box, coeffs, N, table, static_cast<std::size_t>(j), digits, rows);
    }
#else
    std::vector<int> digits;
    std::vector<const cplx*> rows;
    for (std::size_t j = 0; j < total; ++j)
        out[j] = synth_grid_one(box, coeffs, N, table, j, digits, rows);
#endif
    return out;
}

std::vector<cplx> synth_points_serial(const FreqBox& box, std::span<const cplx> coeffs,
                                      std::span<const double> points) {
    const int n = box.n();
    if (points.size() % n != 0)
        throw std::invalid_argument("synth_points: point array not a multiple of n");
    const std::size_t count = points.size() / n;
    std::vector<cplx> out(count);
    std::vector<cplx> scratch;
    std::vector<const cplx*> rows;
    for (std::size_t p = 0; p < count; ++p)
        out[p] = point_value(box, coeffs, points.data() + p * n, scratch, rows);
    return out;
}

std::vector<cplx> synth_points(const FreqBox& box, std::span<const cplx> coeffs,
                               std::span<const double> points) {
    const int n = box.n();
    if (points.size() % n != 0)
        throw std::invalid_argument("synth_points: point array not a multiple of n");
    const std::size_t count = points.size() / n;
    std::vector<cplx> out(count);
#ifdef _OPENMP
#pragma omp parallel num_threads(planned_threads())
    {
        std::vector<cplx> scratch;
        std::vector<const cplx*> rows;
#pragma omp for schedule(static)
        for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(count); ++p)
            out[p] = point_value(box, coeffs, points.data() + static_cast<std::size_t>(p) * n,
                                 scratch, rows);
    }
#else
    std::vector<cplx> scratch;
    std::vector<const cplx*> rows;
    for (std::size_t p = 0; p < count; ++p)
        out[p] = point_value(box, coeffs, points.data() + p * n, scratch, rows);
#endif
    return out;
}

std::vector<cplx> analyze_grid_serial(const FreqBox& box, std::span<const cplx> samples, int N) {
    if (N < 1) throw std::invalid_argument("analyze_grid: N must be >= 1");
    if (samples.size() != pow_size(N, box.n()))
        throw std::invalid_argument("analyze_grid: sample count != N^n");
    const auto conj_row = build_conj_row(N);
    std::vector<cplx> out(box.size());
    std::vector<int> kmod, digits;
    for (std::size_t ki = 0; ki < box.size(); ++ki)
        out[ki] = analyze_one(box, samples, N, conj_row, ki, kmod, digits);
    return out;
}

std::vector<cplx> analyze_grid(const FreqBox& box, std::span<const cplx> samples, int N) {
    if (N < 1) throw std::invalid_argument("analyze_grid: N must be >= 1");
    if (samples.size() != pow_size(N, box.n()))
        throw std::invalid_argument("analyze_grid: sample count != N^n");
    const auto conj_row = build_conj_row(N);
    std::vector<cplx> out(box.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(planned_threads())
    {
        std::vector<int> kmod, digits;
#pragma omp for schedule(static)
        for (std::ptrdiff_t ki = 0; ki < static_cast<std::ptrdiff_t>(box.size()); ++ki)
            out[ki] = analyze_one(box, samples, N, conj_row, static_cast<std::size_t>(ki), kmod, digits);
    }
#else
    std::vector<int> kmod, digits;
    for (std::size_t ki = 0; ki < box.size(); ++ki)
        out[ki] = analyze_one(box, samples, N, conj_row, ki, kmod, digits);
#endif
    return out;
}

} // namespace torusct::kernels
