#include "torusct/spectrum.hpp"

#include <cmath>

#include "torusct/kernels.hpp"

namespace torusct {

bool Spectrum::is_hermitian(double tol) const {
    FreqVec neg(box_.n());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const FreqVec k = box_.freq_at(i);
        for (int j = 0; j < box_.n(); ++j) neg[j] = -k[j];
        if (std::abs(coeffs_[i] - std::conj(coeffs_[box_.index_of(neg)])) > tol) return false;
    }
    return true;
}

Spectrum& Spectrum::operator+=(const Spectrum& other) {
    if (box_ != other.box_) throw std::invalid_argument("Spectrum: box mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    real_ = real_ && other.real_;
    return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& other) {
    if (box_ != other.box_) throw std::invalid_argument("Spectrum: box mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    real_ = real_ && other.real_;
    return *this;
}

Spectrum& Spectrum::operator*=(double scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

Spectrum apply_multiplier(const Spectrum& f, const std::function<cplx(const FreqVec&)>& m) {
    Spectrum out(f.box());
    for (std::size_t i = 0; i < f.box().size(); ++i) out[i] = m(f.box().freq_at(i)) * f[i];
    return out;
}

double hs_norm(const Spectrum& f, double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.box().size(); ++i) {
        const double b = bracket(f.box().freq_at(i));
        acc += std::pow(b, 2.0 * s) * std::norm(f[i]);
    }
    return std::sqrt(acc);
}

cplx hs_inner(const Spectrum& f, const Spectrum& g, double s) {
    if (f.box() != g.box()) throw std::invalid_argument("hs_inner: box mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.box().size(); ++i) {
        const double b = bracket(f.box().freq_at(i));
        acc += std::pow(b, 2.0 * s) * f[i] * std::conj(g[i]);
    }
    return acc;
}

double lp_bessel_norm(const Spectrum& f, double p, double s, int oversample) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("lp_bessel_norm: p must be finite and > 1");
    if (oversample < 2) throw std::invalid_argument("lp_bessel_norm: oversample must be >= 2");
    const Spectrum filtered =
        apply_multiplier(f, [s](const FreqVec& k) { return cplx{std::pow(bracket(k), s), 0.0}; });
    const int N = oversample * f.box().side();
    const auto samples = kernels::synth_grid(filtered.box(), filtered.coeffs(), N);
    double acc = 0.0;
    for (const cplx& v : samples) acc += std::pow(std::abs(v), p);
    return std::pow(acc / static_cast<double>(samples.size()), 1.0 / p);
}

std::vector<cplx> evaluate_grid(const Spectrum& f, int N) {
    return kernels::synth_grid(f.box(), f.coeffs(), N);
}

Spectrum spectrum_from_grid(const FreqBox& box, std::span<const cplx> samples, int N) {
    if (N <= 2 * box.K())
        throw std::invalid_argument("spectrum_from_grid: need N > 2K for lossless analysis");
    return Spectrum(box, kernels::analyze_grid(box, samples, N));
}

} // namespace torusct
