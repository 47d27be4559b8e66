#include "torusct/radon.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "torusct/errors.hpp"
#include "torusct/kernels.hpp"

namespace torusct {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string freq_to_string(const FreqVec& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

std::size_t pow_size(int side, int dims) {
    std::size_t s = 1;
    for (int i = 0; i < dims; ++i) s *= static_cast<std::size_t>(side);
    return s;
}

} // namespace

Sinogram forward(const Spectrum& f, const DirectionSet& D) {
    if (f.box().n() != D.n()) throw std::invalid_argument("forward: dimension mismatch");
    const OrthoTable table(f.box(), D);
    std::vector<Spectrum> spectra(D.size(), Spectrum(f.box()));
    for (std::size_t i = 0; i < f.box().size(); ++i)
        for (int j : table.omega_indices(i)) spectra[static_cast<std::size_t>(j)][i] = f[i];
    return Sinogram(D, std::move(spectra));
}

int quadrature_min_points(const FreqBox& box, const Direction& A) {
    // The t_i-integrand frequencies are k . v_i; an M-point rectangle rule
    // integrates e^{2 pi i m t} exactly iff M does not divide m, so any
    // M > max |k . v| is exact for the whole box.
    std::int64_t max_kv = 0;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        for (const auto& v : A.basis()) {
            std::int64_t dot = 0;
            for (int c = 0; c < A.n(); ++c) dot += v[c] * k[c];
            max_kv = std::max(max_kv, dot < 0 ? -dot : dot);
        }
    }
    return static_cast<int>(max_kv + 1);
}

Spectrum forward_quadrature(const Spectrum& f, const Direction& A, int M) {
    if (f.box().n() != A.n())
        throw std::invalid_argument("forward_quadrature: dimension mismatch");
    const int required = quadrature_min_points(f.box(), A);
    if (M < required)
        throw std::invalid_argument("forward_quadrature: M = " + std::to_string(M) +
                                    " below Nyquist bound, need M >= " + std::to_string(required));
    const int n = f.box().n();
    const int d = A.d();
    const int N = f.box().side(); // N = 2K+1 > 2K: lossless sampling of the output
    const std::size_t x_count = pow_size(N, n);
    const std::size_t t_count = pow_size(M, d);

    // all evaluation points x_j + (t/M) . A, grouped by x sample
    std::vector<double> points;
    points.reserve(x_count * t_count * static_cast<std::size_t>(n));
    std::vector<int> xd(n), td(d);
    for (std::size_t xj = 0; xj < x_count; ++xj) {
        std::size_t rem = xj;
        for (int i = n - 1; i >= 0; --i) {
            xd[i] = static_cast<int>(rem % N);
            rem /= N;
        }
        for (std::size_t tj = 0; tj < t_count; ++tj) {
            std::size_t trem = tj;
            for (int i = d - 1; i >= 0; --i) {
                td[i] = static_cast<int>(trem % M);
                trem /= M;
            }
            for (int c = 0; c < n; ++c) {
                double coord = static_cast<double>(xd[c]) / N;
                for (int r = 0; r < d; ++r)
                    coord += static_cast<double>(td[r]) / M * static_cast<double>(A.basis()[r][c]);
                points.push_back(coord);
            }
        }
    }
    const auto values = kernels::synth_points(f.box(), f.coeffs(), points);

    // rectangle rule along the plane, in fixed t order per x sample
    std::vector<cplx> averaged(x_count);
    for (std::size_t xj = 0; xj < x_count; ++xj) {
        cplx acc{0.0, 0.0};
        for (std::size_t tj = 0; tj < t_count; ++tj) acc += values[xj * t_count + tj];
        averaged[xj] = acc / static_cast<double>(t_count);
    }
    return spectrum_from_grid(f.box(), averaged, N);
}

int default_transverse_grid(const FreqBox& box, const Direction& A) {
    const std::int64_t side =
        2 * (static_cast<std::int64_t>(box.K()) * std::max<std::int64_t>(A.max_entry(), 1) * box.n()) + 1;
    return static_cast<int>(std::max<std::int64_t>(side, 2 * box.K() + 1));
}

std::vector<cplx> transverse_samples(const Spectrum& data, const Direction& A, int grid_side) {
    if (data.box().n() != A.n())
        throw std::invalid_argument("transverse_samples: dimension mismatch");
    const TransverseFrame frame = transverse_frame(A);
    const int q = static_cast<int>(frame.axes.size());
    const std::size_t count = pow_size(grid_side, q);
    std::vector<double> points(count * static_cast<std::size_t>(A.n()), 0.0);
    std::vector<int> tdig(q);
    for (std::size_t j = 0; j < count; ++j) {
        std::size_t rem = j;
        for (int i = q - 1; i >= 0; --i) {
            tdig[i] = static_cast<int>(rem % grid_side);
            rem /= grid_side;
        }
        // phi_A(T, 0) places t_i on the chosen axis; all other coords stay 0
        for (int i = 0; i < q; ++i)
            points[j * static_cast<std::size_t>(A.n()) + static_cast<std::size_t>(frame.axes[i])] =
                static_cast<double>(tdig[i]) / grid_side;
    }
    return kernels::synth_points(data.box(), data.coeffs(), points);
}

cplx slice_invert(const std::vector<cplx>& samples, int grid_side, const Direction& A,
                  const FreqVec& k, double smoothing_s) {
    if (static_cast<int>(k.size()) != A.n())
        throw std::invalid_argument("slice_invert: dimension mismatch");
    if (!is_orthogonal(k, A))
        throw std::invalid_argument("slice_invert: k not orthogonal to A, formula inapplicable");
    const TransverseFrame frame = transverse_frame(A);
    const int q = static_cast<int>(frame.axes.size());
    if (samples.size() != pow_size(grid_side, q))
        throw std::invalid_argument("slice_invert: sample count != grid_side^q");

    std::vector<int> tdig(q);
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < samples.size(); ++j) {
        std::size_t rem = j;
        for (int i = q - 1; i >= 0; --i) {
            tdig[i] = static_cast<int>(rem % grid_side);
            rem /= grid_side;
        }
        double phase = 0.0;
        for (int i = 0; i < q; ++i)
            phase += static_cast<double>(k[static_cast<std::size_t>(frame.axes[i])]) * tdig[i] /
                     grid_side;
        acc += samples[j] * cplx{std::cos(-two_pi * phase), std::sin(-two_pi * phase)};
    }
    acc /= static_cast<double>(samples.size());
    return std::pow(bracket(k), 2.0 * smoothing_s) * acc;
}

Spectrum adjoint(const Sinogram& g, const Weight& w) {
    const FreqBox& box = g.box();
    const OrthoTable table(box, g.directions());
    Spectrum out(box);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        cplx acc{0.0, 0.0};
        for (int j : table.omega_indices(i)) {
            const double wv = w(k, g.directions()[static_cast<std::size_t>(j)]);
            acc += wv * wv * g.spectrum(static_cast<std::size_t>(j))[i];
        }
        out[i] = acc;
    }
    return out;
}

NormalMultiplier normal_multiplier(const Weight& w, const DirectionSet& D, const FreqBox& box) {
    NormalMultiplier nm{box, normal_table(w, D, box), 0.0, 0.0, {}};
    nm.min_Wk = nm.W.empty() ? 0.0 : nm.W[0];
    nm.max_Wk = nm.min_Wk;
    for (std::size_t i = 0; i < nm.W.size(); ++i) {
        nm.min_Wk = std::min(nm.min_Wk, nm.W[i]);
        nm.max_Wk = std::max(nm.max_Wk, nm.W[i]);
        if (nm.W[i] == 0.0) nm.uncovered.push_back(box.freq_at(i));
    }
    return nm;
}

Spectrum invert_filtered_adjoint(const Sinogram& g, const Weight& w) {
    const NormalMultiplier nm = normal_multiplier(w, g.directions(), g.box());
    if (!nm.uncovered.empty()) {
        std::string msg = "invert_filtered_adjoint: W_k = 0 at";
        for (const auto& k : nm.uncovered) msg += " " + freq_to_string(k);
        throw CoveringError(msg);
    }
    const Spectrum back = adjoint(g, w);
    return apply_multiplier(back, [&nm](const FreqVec& k) { return cplx{1.0 / nm.at(k), 0.0}; });
}

Spectrum invert_bp_sum(const Sinogram& g, const Weight& w1) {
    const FreqBox& box = g.box();
    const OrthoTable table(box, g.directions());
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        double sum = 0.0;
        for (int j : table.omega_indices(i)) sum += w1(k, g.directions()[static_cast<std::size_t>(j)]);
        if (std::abs(sum - 1.0) > 1e-12)
            throw WeightError("invert_bp_sum: partition-of-unity violation at " +
                              freq_to_string(k) + ", sum = " + std::to_string(sum));
    }
    Spectrum out(box);
    for (std::size_t a = 0; a < g.size(); ++a) {
        const Direction& A = g.directions()[a];
        const Spectrum term = apply_multiplier(
            g.spectrum(a), [&](const FreqVec& k) { return cplx{w1(k, A), 0.0}; });
        out += term;
    }
    return out;
}

} // namespace torusct
