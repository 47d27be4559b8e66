#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "torusct/radon.hpp"

namespace torusct {

/// Parameters of the Tikhonov problem and of the regularization-rate
/// regime: penalty scale s, data scale r, noise scale t, smoothness
/// surplus delta, and the weight defining the data space.
struct TikhonovConfig {
    double alpha = 0.0;
    double s = 0.0;
    double r = 0.0;
    double t = 0.0;
    double delta = 0.0;
    Weight weight = constant_weight(1.0);
};

/// p_{w,z}^alpha(k) = 1 / (W_k + alpha ⟨k⟩^{2z}); strictly positive for
/// alpha > 0.
std::function<double(const FreqVec&)> tikhonov_multiplier(const Weight& w, double z, double alpha,
                                                          const FreqBox& box,
                                                          const DirectionSet& D);

/// Closed-form minimizer P_{w,s-r}^alpha R_d^* g of the Tikhonov
/// functional. Requires s >= r and alpha > 0. On the full frequency
/// lattice the multiplier decay places the minimizer two penalty orders
/// above the data scale (H^{2s-r}); on a finite box every spectrum is
/// smooth, so that only shows up as decay of the output coefficients.
Spectrum tikhonov_solve(const Sinogram& g, const TikhonovConfig& cfg);

/// The minimized functional || R_d f - g ||_{L_r^{2,2}(w)}^2
/// + alpha || f ||_{H^s}^2, including the f-independent off-slice part of
/// the residual.
double tikhonov_objective(const Spectrum& f, const Sinogram& g, const TikhonovConfig& cfg);

/// Derivative-free oracle: minimizes each per-frequency quadratic by
/// successive 1-D grid refinement on the real and imaginary parts
/// separately, never through the closed form, until the bracket width
/// drops below tol (NumericError after 60 rounds).
Spectrum brute_force_minimize(const Sinogram& g, const TikhonovConfig& cfg, double tol);

/// C(x) = x (x^{-1} - 1)^{1-x} for x in (0,1).
double rate_constant(double x);

/// Right-hand side of the quantitative convergence rate,
/// alpha^{delta/2s} c_w^{-delta/s} C(delta/2s) |f|_{H^{r+delta}}
/// + C_w^3 c_w^{-2} epsilon / alpha, using the weight's certified bounds.
/// Hypothesis violations throw with the violated condition named.
double rate_bound(const TikhonovConfig& cfg, double f_smooth_norm, double epsilon);

/// True when (cfg, alpha) lies in the proved regime of the quantitative
/// rate: s > 0, 2s + t >= r, 0 < delta < 2s, alpha <= c_w^2 (2s/delta - 1),
/// with certified weight bounds.
bool rate_in_regime(const TikhonovConfig& cfg);

/// i.i.d. complex Gaussian per (k, A), rescaled so the L_t^{2,2}(w) norm
/// of the perturbation is exactly eps.
Sinogram add_noise(const Sinogram& g, const Weight& w, double eps, double t, std::uint64_t seed);

struct RateReport {
    double epsilon;
    double alpha;
    double lhs_error;  ///< H^r reconstruction error
    double rhs_bound;  ///< quantitative rate value (NaN out of regime)
    bool in_regime;
    bool pass;         ///< lhs <= rhs; meaningful only in regime
};

/// For each epsilon: draws noise at exact norm epsilon, reconstructs with
/// P_{w,s}^{alpha(eps)} R_d^*, and records the H^r error against the rate
/// bound. alpha_rule defaults to sqrt when empty.
std::vector<RateReport> regstrat_experiment(const Spectrum& f, const TikhonovConfig& cfg,
                                            const DirectionSet& D,
                                            const std::vector<double>& epsilons,
                                            const std::function<double(double)>& alpha_rule,
                                            std::uint64_t seed);

/// CSV with a seed header row: epsilon,alpha,h_r_error,bound,in_regime,pass.
std::string regstrat_csv(const std::vector<RateReport>& reports, std::uint64_t seed);

struct StabilityRow {
    double p;
    double s;
    double shift;     ///< s(p,n) = n |p-2| / (2p), 0 for p <= 2
    double lhs;       ///< || f ||_{L_s^p}
    double rhs;       ///< data-space norm (shifted for p > 2)
    double ratio;     ///< lhs / rhs
    bool asserted;    ///< inequality with C1 = 1/c_w is claimed (p <= 2)
    bool holds;
};

/// Both sides of the shifted stability estimate: asserted with
/// C1 = 1/sqrt(min W_k) for p <= 2, ratio-only for p > 2.
StabilityRow stability_report(const Spectrum& f, const Weight& w, const DirectionSet& D, double s,
                              double p);

std::string stability_csv(const std::vector<StabilityRow>& rows);

} // namespace torusct
