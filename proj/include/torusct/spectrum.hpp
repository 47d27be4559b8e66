#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "torusct/freq_box.hpp"

namespace torusct {

using cplx = std::complex<double>;

/// A band-limited function on T^n held as its Fourier coefficients over a
/// FreqBox. Frequencies outside the box are implicitly zero. Immutable in
/// spirit: operations return new spectra.
class Spectrum {
  public:
    explicit Spectrum(FreqBox box, bool real = false)
        : box_(box), coeffs_(box.size(), cplx{0.0, 0.0}), real_(real) {}

    Spectrum(FreqBox box, std::vector<cplx> coeffs, bool real = false)
        : box_(box), coeffs_(std::move(coeffs)), real_(real) {
        if (coeffs_.size() != box_.size())
            throw std::invalid_argument("Spectrum: coefficient count != box size");
    }

    /// Single unit coefficient at frequency k.
    static Spectrum delta(const FreqBox& box, const FreqVec& k, cplx value = cplx{1.0, 0.0}) {
        Spectrum f(box);
        f.set(k, value);
        return f;
    }

    const FreqBox& box() const { return box_; }
    bool real_flag() const { return real_; }
    void set_real_flag(bool r) { real_ = r; }

    cplx at(const FreqVec& k) const { return coeffs_[box_.index_of(k)]; }
    void set(const FreqVec& k, cplx v) { coeffs_[box_.index_of(k)] = v; }

    cplx operator[](std::size_t i) const { return coeffs_[i]; }
    cplx& operator[](std::size_t i) { return coeffs_[i]; }

    std::span<const cplx> coeffs() const { return coeffs_; }

    /// f̂(-k) == conj(f̂(k)) within tol for every k in the box.
    bool is_hermitian(double tol = 1e-12) const;

    Spectrum& operator+=(const Spectrum& other);
    Spectrum& operator-=(const Spectrum& other);
    Spectrum& operator*=(double scale);

    friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
    friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
    friend Spectrum operator*(Spectrum a, double s) { return a *= s; }

  private:
    FreqBox box_;
    std::vector<cplx> coeffs_;
    bool real_;
};

/// Pointwise Fourier multiplier: output coefficient at k is m(k) * f̂(k).
Spectrum apply_multiplier(const Spectrum& f, const std::function<cplx(const FreqVec&)>& m);

/// H^s norm: sqrt( sum_k ⟨k⟩^{2s} |f̂(k)|^2 ).
double hs_norm(const Spectrum& f, double s);

/// H^s inner product: sum_k ⟨k⟩^{2s} f̂(k) conj(ĝ(k)).
cplx hs_inner(const Spectrum& f, const Spectrum& g, double s);

/// Bessel potential norm || (1-Delta)^{s/2} f ||_{L^p}, approximated by the
/// Riemann p-mean on the uniform grid with oversample*(2K+1) points per
/// axis. Exact for p = 2 and even p small enough for the grid; otherwise
/// the error decreases with oversample. Rejects p <= 1 and non-finite p.
double lp_bessel_norm(const Spectrum& f, double p, double s, int oversample = 4);

/// Samples on the uniform grid j/N, j in {0..N-1}^n (lexicographic).
/// Sampling with N > 2K is lossless: analyze_grid recovers the coefficients.
std::vector<cplx> evaluate_grid(const Spectrum& f, int N);

/// Inverse of evaluate_grid for N > 2K.
Spectrum spectrum_from_grid(const FreqBox& box, std::span<const cplx> samples, int N);

} // namespace torusct
