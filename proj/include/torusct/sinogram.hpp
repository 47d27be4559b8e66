#pragma once

#include <vector>

#include "torusct/direction_set.hpp"
#include "torusct/spectrum.hpp"
#include "torusct/weight.hpp"

namespace torusct {

/// Per-direction data on T^n x Gr(d,n): one Spectrum per direction of an
/// ordered DirectionSet, all sharing a single FreqBox. This is both the
/// data-space element g(.,A) and the forward-transform output R_{d,A} f.
class Sinogram {
  public:
    Sinogram(DirectionSet directions, std::vector<Spectrum> spectra)
        : directions_(std::move(directions)), spectra_(std::move(spectra)) {
        if (spectra_.empty()) throw std::invalid_argument("Sinogram: needs at least one direction");
        if (directions_.size() != spectra_.size())
            throw std::invalid_argument("Sinogram: direction/spectrum count mismatch");
        for (std::size_t i = 1; i < spectra_.size(); ++i)
            if (spectra_[i].box() != spectra_[0].box())
                throw std::invalid_argument("Sinogram: spectra must share one box");
    }

    const DirectionSet& directions() const { return directions_; }
    const FreqBox& box() const { return spectra_.at(0).box(); }
    std::size_t size() const { return spectra_.size(); }

    const Spectrum& spectrum(std::size_t i) const { return spectra_[i]; }
    Spectrum& spectrum(std::size_t i) { return spectra_[i]; }
    const std::vector<Spectrum>& spectra() const { return spectra_; }

    Sinogram& operator+=(const Sinogram& other);
    Sinogram& operator-=(const Sinogram& other);
    friend Sinogram operator+(Sinogram a, const Sinogram& b) { return a += b; }
    friend Sinogram operator-(Sinogram a, const Sinogram& b) { return a -= b; }

  private:
    DirectionSet directions_;
    std::vector<Spectrum> spectra_;
};

/// Weighted data norm || g ||_{L_s^{p,l}(w)}: the l-mean over directions
/// (supremum for l = infinity) of the w(.,A)-weighted L_s^p norms. The
/// p = 2 case is evaluated exactly on the Fourier side; other p go
/// through the grid approximation of lp_bessel_norm. Requires l >= 1.
double data_norm(const Sinogram& g, const Weight& w, double s, double p, double l,
                 int oversample = 4);

/// The L_s^{2,2}(w) inner product, evaluated from its defining sum
/// sum_A sum_k w(k,A)^2 ⟨k⟩^{2s} ĥ(k,A) conj(ĝ(k,A)).
cplx data_inner(const Sinogram& h, const Sinogram& g, const Weight& w, double s);

} // namespace torusct
