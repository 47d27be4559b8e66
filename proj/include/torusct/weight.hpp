#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torusct/direction_set.hpp"
#include "torusct/freq_box.hpp"

namespace torusct {

/// Polynomial-decay certificate: w(k,A) >= coeff(A) * ⟨k⟩^{-N}. The
/// constant may vary with the direction; only positivity is required.
struct DecayCertificate {
    double N;
    std::function<double(const Direction&)> coeff;
};

/// Normal-symbol range certificate: lower <= W_k <= upper, for
/// W_k = sum over Omega_k of w(k,A)^2.
struct BoundCertificate {
    double lower;
    double upper;
};

/// A positive weight rule (k, A) -> w(k,A) together with the optional
/// certificates the stability and rate bounds consume. Immutable value
/// object.
class Weight {
  public:
    using Rule = std::function<double(const FreqVec&, const Direction&)>;

    Weight(std::string kind, Rule rule) : kind_(std::move(kind)), rule_(std::move(rule)) {}

    double operator()(const FreqVec& k, const Direction& A) const { return rule_(k, A); }

    const std::string& kind() const { return kind_; }
    const std::optional<DecayCertificate>& decay() const { return decay_; }
    const std::optional<BoundCertificate>& bounds() const { return bounds_; }

    Weight& set_decay(DecayCertificate c) {
        decay_ = std::move(c);
        return *this;
    }
    Weight& set_bounds(BoundCertificate c) {
        bounds_ = c;
        return *this;
    }

  private:
    std::string kind_;
    Rule rule_;
    std::optional<DecayCertificate> decay_;
    std::optional<BoundCertificate> bounds_;
};

/// w == value everywhere; no certificates attached.
Weight constant_weight(double value = 1.0);

/// The certified construction w(k,A) = h(k)/phi_k(A)^e + ⟨k⟩^{-N}/phi(A)
/// on Q = {(k,A) : k orthogonal to A}, and 1 off Q. h must take values in
/// [a,b] with 0 < a <= b. Attaches the analytic certificates:
/// a^2 <= W_k <= 2 C_e (1+b^2) and w(k,A) >= phi(A)^{-1} ⟨k⟩^{-N}.
/// e defaults to 1 (the certified exponent) and must stay > 1/2.
Weight good_weight(const std::function<double(const FreqVec&)>& h, double a, double b, double N,
                   const DirectionSet& D, const FreqBox& box, double phi_k_exponent = 1.0);

/// w(k,A) = 2^{-phi_k(A)} renormalized by the finite geometric sum so the
/// first-power sums over Omega_k are exactly 1; w = 1 off Q. Requires
/// every k in the box to be covered.
Weight partition_weight(const DirectionSet& D, const FreqBox& box);

/// w~(k,A) = w(k,A)/sqrt(W_k): makes W~_k == 1 on the box. Certificates
/// become (1, 1); a decay certificate is carried over, rescaled by the
/// empirical sqrt(max W_k).
Weight normalize(const Weight& w, const DirectionSet& D, const FreqBox& box);

/// W_k = sum over Omega_k cap D of w(k,A)^2, dense over the box.
std::vector<double> normal_table(const Weight& w, const DirectionSet& D, const FreqBox& box);

struct PropertyResult {
    std::string property;           ///< "decay", "upper_bound", "lower_bound"
    bool pass;
    double min_value;               ///< property-specific minimum over the corpus
    double max_value;
    std::optional<FreqVec> witness; ///< a violating k when pass is false
    std::string note;
};

struct ValidationReport {
    std::vector<PropertyResult> rows;
    double min_Wk;
    double max_Wk;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/// Checks the three weight properties over box x D. Declared certificates
/// are verified pointwise; without certificates the properties are judged
/// empirically (any strictly positive weight passes on a finite corpus,
/// with the fitted constants reported). Failures are report entries, not
/// exceptions.
ValidationReport validate(const Weight& w, const DirectionSet& D, const FreqBox& box);

/// CSV rows: property,pass,min,max,witness_k
std::string to_csv(const ValidationReport& report);

} // namespace torusct
