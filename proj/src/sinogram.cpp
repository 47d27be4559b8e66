#include "torusct/sinogram.hpp"

#include <cmath>
#include <limits>

namespace torusct {

Sinogram& Sinogram::operator+=(const Sinogram& other) {
    if (!(directions_ == other.directions_))
        throw std::invalid_argument("Sinogram: direction sets differ");
    for (std::size_t i = 0; i < spectra_.size(); ++i) spectra_[i] += other.spectra_[i];
    return *this;
}

Sinogram& Sinogram::operator-=(const Sinogram& other) {
    if (!(directions_ == other.directions_))
        throw std::invalid_argument("Sinogram: direction sets differ");
    for (std::size_t i = 0; i < spectra_.size(); ++i) spectra_[i] -= other.spectra_[i];
    return *this;
}

namespace {

// || F_{w(.,A)} g(.,A) ||_{L_s^p}
double per_direction_norm(const Spectrum& g, const Direction& A, const Weight& w, double s,
                          double p, int oversample) {
    if (p == 2.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < g.box().size(); ++i) {
            const FreqVec k = g.box().freq_at(i);
            const double wv = w(k, A);
            acc += wv * wv * std::pow(bracket(k), 2.0 * s) * std::norm(g[i]);
        }
        return std::sqrt(acc);
    }
    const Spectrum weighted =
        apply_multiplier(g, [&](const FreqVec& k) { return cplx{w(k, A), 0.0}; });
    return lp_bessel_norm(weighted, p, s, oversample);
}

} // namespace

double data_norm(const Sinogram& g, const Weight& w, double s, double p, double l,
                 int oversample) {
    if (l < 1.0) throw std::invalid_argument("data_norm: l must be >= 1");
    const bool sup_norm = std::isinf(l);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double term = per_direction_norm(g.spectrum(i), g.directions()[i], w, s, p, oversample);
        if (sup_norm)
            acc = std::max(acc, term);
        else
            acc += std::pow(term, l);
    }
    return sup_norm ? acc : std::pow(acc, 1.0 / l);
}

cplx data_inner(const Sinogram& h, const Sinogram& g, const Weight& w, double s) {
    if (!(h.directions() == g.directions()) || h.box() != g.box())
        throw std::invalid_argument("data_inner: mismatched sinograms");
    cplx acc{0.0, 0.0};
    for (std::size_t a = 0; a < h.size(); ++a) {
        const Direction& A = h.directions()[a];
        for (std::size_t i = 0; i < h.box().size(); ++i) {
            const FreqVec k = h.box().freq_at(i);
            const double wv = w(k, A);
            acc += wv * wv * std::pow(bracket(k), 2.0 * s) * h.spectrum(a)[i] *
                   std::conj(g.spectrum(a)[i]);
        }
    }
    return acc;
}

} // namespace torusct
