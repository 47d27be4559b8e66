#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "torusct/spectrum.hpp"

namespace torusct {

/// Deterministic random source: mt19937_64 (sequence pinned by the
/// standard) with a hand-rolled Box-Muller, so outputs are reproducible
/// across platforms and library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    cplx complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx{re, im} / std::sqrt(2.0);
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

/// Seeded band-limited phantom with an ⟨k⟩^{-envelope} coefficient decay.
/// `hermitian` symmetrizes the draw so the phantom is real-valued.
inline Spectrum random_spectrum(const FreqBox& box, std::uint64_t seed, double envelope = 2.0,
                                bool hermitian = false) {
    Rng rng(seed);
    Spectrum f(box, hermitian);
    for (std::size_t i = 0; i < box.size(); ++i)
        f[i] = rng.complex_gaussian() * std::pow(bracket(box.freq_at(i)), -envelope);
    if (hermitian) {
        FreqVec neg(box.n());
        for (std::size_t i = 0; i < box.size(); ++i) {
            const FreqVec k = box.freq_at(i);
            for (int j = 0; j < box.n(); ++j) neg[j] = -k[j];
            const std::size_t ni = box.index_of(neg);
            if (ni < i) continue;
            const cplx sym = 0.5 * (f[i] + std::conj(f[ni]));
            f[i] = sym;
            f[ni] = std::conj(sym);
        }
    }
    return f;
}

} // namespace torusct
