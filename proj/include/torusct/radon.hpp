#pragma once

#include <vector>

#include "torusct/sinogram.hpp"

namespace torusct {

/// Forward d-plane Radon transform by the slice identity: per direction A
/// the output coefficient at k is f̂(k) when k is orthogonal to A and 0
/// otherwise. Exact for band-limited f.
Sinogram forward(const Spectrum& f, const DirectionSet& D);

/// Smallest admissible quadrature count for forward_quadrature: one more
/// than twice the largest |k . v| over the box and A's basis rows.
int quadrature_min_points(const FreqBox& box, const Direction& A);

/// Independent oracle for forward(): computes R_{d,A} f by the uniform
/// M^d-point rectangle rule applied to the defining plane integral at
/// torus grid samples, then re-reads the samples as a Spectrum. Exact to
/// rounding once M exceeds the Nyquist bound of the integrand; smaller M
/// is rejected with the required value in the message. Never consults the
/// slice identity.
Spectrum forward_quadrature(const Spectrum& f, const Direction& A, int M);

/// Physical-space samples of `data` (a spectrum on T^n) at the transverse
/// points phi_A(T, 0), T on the uniform grid of [0,1]^q with `grid_side`
/// points per axis, lexicographic in T.
std::vector<cplx> transverse_samples(const Spectrum& data, const Direction& A, int grid_side);

/// Default transverse grid side, deliberately far above the Nyquist need
/// so the wrapping geometry is exercised on a dense grid.
int default_transverse_grid(const FreqBox& box, const Direction& A);

/// First inversion formula: recovers f̂(k), k orthogonal to A, as the
/// uniform-sum approximation of the transverse oscillatory integral of
/// R_{d,A} f, multiplied by ⟨k⟩^{2s} (s = 0 gives the plain formula;
/// s > 0 is the smoothed variant for data pre-filtered by ⟨k⟩^{-2s}).
cplx slice_invert(const std::vector<cplx>& samples, int grid_side, const Direction& A,
                  const FreqVec& k, double smoothing_s = 0.0);

/// Adjoint of R_d on L_s^{2,2}(w): coefficient at k is
/// sum over A in Omega_k of w(k,A)^2 ĝ(k,A). The formula does not depend
/// on the Sobolev scale.
Spectrum adjoint(const Sinogram& g, const Weight& w);

/// The normal operator symbol W_k over the box, with its empirical range
/// and the list of uncovered frequencies (W_k = 0), computed once.
struct NormalMultiplier {
    FreqBox box;
    std::vector<double> W;       ///< dense over the box
    double min_Wk;               ///< empirical c_w^2
    double max_Wk;               ///< empirical C_w^2
    std::vector<FreqVec> uncovered;

    double at(const FreqVec& k) const { return W[box.index_of(k)]; }
};

NormalMultiplier normal_multiplier(const Weight& w, const DirectionSet& D, const FreqBox& box);

/// Inversion via the normal operator: F_{1/W_k} R_d^* g. Exact on forward
/// data. Throws CoveringError when some W_k vanishes.
Spectrum invert_filtered_adjoint(const Sinogram& g, const Weight& w);

/// Backprojection-sum inversion: sum over A of F_{w1(.,A)} g(.,A), valid
/// for weights whose first-power sums over Omega_k equal 1. The partition
/// identity is verified to 1e-12 at every k first (WeightError otherwise).
Spectrum invert_bp_sum(const Sinogram& g, const Weight& w1);

} // namespace torusct
