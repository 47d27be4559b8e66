#include "torusct/weight.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <sstream>

#include "torusct/errors.hpp"

namespace torusct {

namespace {

std::string freq_to_string(const FreqVec& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

// resolves (k, A) to (box index, omega rank, 1-based global phi index)
struct Resolver {
    FreqBox box;
    DirectionSet dirs;
    std::shared_ptr<const OrthoTable> table;

    Resolver(const FreqBox& b, const DirectionSet& d)
        : box(b), dirs(d), table(std::make_shared<OrthoTable>(b, d)) {}

    std::pair<int, int> rank_and_phi(const FreqVec& k, const Direction& A) const {
        if (!box.contains(k))
            throw WeightError("weight undefined for frequency " + freq_to_string(k));
        const auto j = dirs.index_of(A);
        if (!j) throw WeightError("weight undefined for direction outside its set");
        const int rank = table->rank_in_omega(box.index_of(k), static_cast<int>(*j));
        return {rank, static_cast<int>(*j) + 1};
    }
};

} // namespace

Weight constant_weight(double value) {
    if (!(value > 0.0)) throw std::invalid_argument("constant_weight: value must be > 0");
    return Weight("constant", [value](const FreqVec&, const Direction&) { return value; });
}

Weight good_weight(const std::function<double(const FreqVec&)>& h, double a, double b, double N,
                   const DirectionSet& D, const FreqBox& box, double phi_k_exponent) {
    if (!(a > 0.0)) throw std::invalid_argument("good_weight: a must be > 0");
    if (!(b >= a) || !std::isfinite(b)) throw std::invalid_argument("good_weight: need a <= b < inf");
    if (N < 0.0) throw std::invalid_argument("good_weight: N must be >= 0");
    if (!(phi_k_exponent > 0.5))
        throw std::invalid_argument("good_weight: phi_k exponent must be > 1/2");
    for (std::size_t i = 0; i < box.size(); ++i) {
        const double hv = h(box.freq_at(i));
        if (!(hv >= a) || !(hv <= b))
            throw std::invalid_argument("good_weight: h takes a value outside [a,b]");
    }

    const auto res = std::make_shared<Resolver>(box, D);
    const double e = phi_k_exponent;
    Weight w("good", [res, h, N, e](const FreqVec& k, const Direction& A) {
        const auto [rank, phi] = res->rank_and_phi(k, A);
        if (rank == 0) return 1.0; // (k, A) off Q
        return h(k) / std::pow(static_cast<double>(rank), e) +
               std::pow(bracket(k), -N) / static_cast<double>(phi);
    });

    // Analytic certificates. Lower: the first term alone gives
    // W_k >= h(k)^2 >= a^2. Upper: W_k <= 2 (b^2 sum_i i^{-2e} + sum_i i^{-2}),
    // the h-term over the rank enumeration and the decay term over the
    // injective global enumeration; sum_i i^{-2} = pi^2/6 and the general
    // exponent uses the integral bound 1 + 1/(2e-1).
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    const double c_e = e == 1.0 ? zeta2 : 1.0 + 1.0 / (2.0 * e - 1.0);
    w.set_bounds({a * a, 2.0 * (c_e * b * b + zeta2)});
    const DirectionSet dirs = D;
    w.set_decay({N, [dirs](const Direction& A) {
                     const auto j = dirs.index_of(A);
                     if (!j) throw WeightError("decay certificate queried off the direction set");
                     return 1.0 / static_cast<double>(*j + 1);
                 }});
    return w;
}

Weight partition_weight(const DirectionSet& D, const FreqBox& box) {
    const auto res = std::make_shared<Resolver>(box, D);
    for (std::size_t i = 0; i < box.size(); ++i)
        if (res->table->omega_indices(i).empty())
            throw CoveringError("partition_weight: uncovered frequency " +
                                freq_to_string(box.freq_at(i)));
    return Weight("partition", [res](const FreqVec& k, const Direction& A) {
        const auto [rank, phi] = res->rank_and_phi(k, A);
        (void)phi;
        if (rank == 0) return 1.0;
        const std::size_t m = res->table->omega_indices(res->box.index_of(k)).size();
        return std::pow(2.0, -rank) / (1.0 - std::pow(2.0, -static_cast<double>(m)));
    });
}

std::vector<double> normal_table(const Weight& w, const DirectionSet& D, const FreqBox& box) {
    const OrthoTable table(box, D);
    std::vector<double> W(box.size(), 0.0);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        for (int j : table.omega_indices(i)) {
            const double v = w(k, D[static_cast<std::size_t>(j)]);
            W[i] += v * v;
        }
    }
    return W;
}

Weight normalize(const Weight& w, const DirectionSet& D, const FreqBox& box) {
    const auto W = std::make_shared<std::vector<double>>(normal_table(w, D, box));
    double max_W = 0.0;
    for (std::size_t i = 0; i < W->size(); ++i) {
        if ((*W)[i] <= 0.0)
            throw CoveringError("normalize: W_k = 0 at frequency " +
                                freq_to_string(box.freq_at(i)));
        max_W = std::max(max_W, (*W)[i]);
    }
    const Weight base = w;
    const FreqBox b = box;
    Weight out("normalized", [base, b, W](const FreqVec& k, const Direction& A) {
        if (!b.contains(k))
            throw WeightError("weight undefined for frequency " + freq_to_string(k));
        return base(k, A) / std::sqrt((*W)[b.index_of(k)]);
    });
    for (double v : normal_table(out, D, box))
        if (std::abs(v - 1.0) > 1e-12)
            throw NumericError("normalize: renormalized W_k differs from 1 beyond 1e-12");
    out.set_bounds({1.0, 1.0});
    if (w.decay()) {
        const DecayCertificate dc = *w.decay();
        const double scale = 1.0 / std::sqrt(max_W);
        out.set_decay({dc.N, [dc, scale](const Direction& A) { return scale * dc.coeff(A); }});
    }
    return out;
}

ValidationReport validate(const Weight& w, const DirectionSet& D, const FreqBox& box) {
    ValidationReport report;
    const auto W = normal_table(w, D, box);
    report.min_Wk = W.empty() ? 0.0 : W[0];
    report.max_Wk = report.min_Wk;
    std::optional<FreqVec> min_witness;
    for (std::size_t i = 0; i < W.size(); ++i) {
        if (W[i] < report.min_Wk) {
            report.min_Wk = W[i];
            min_witness = box.freq_at(i);
        }
        report.max_Wk = std::max(report.max_Wk, W[i]);
    }

    // (i) decay lower bound on w itself
    {
        PropertyResult row{"decay", true, 0.0, 0.0, std::nullopt, ""};
        double min_ratio = std::numeric_limits<double>::infinity();
        double max_ratio = 0.0;
        double uniform_coeff = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < D.size(); ++j) {
            const double coeff = w.decay() ? w.decay()->coeff(D[j]) : 0.0;
            for (std::size_t i = 0; i < box.size(); ++i) {
                const FreqVec k = box.freq_at(i);
                const double value = w(k, D[j]);
                if (w.decay()) {
                    const double floor = coeff * std::pow(bracket(k), -w.decay()->N);
                    if (value < floor && row.pass) {
                        row.pass = false;
                        row.witness = k;
                    }
                    min_ratio = std::min(min_ratio, value / floor);
                    max_ratio = std::max(max_ratio, value / floor);
                } else {
                    // empirical certificate with N = 0: C_A = min_k w(k, A)
                    if (value <= 0.0 && row.pass) {
                        row.pass = false;
                        row.witness = k;
                    }
                    min_ratio = std::min(min_ratio, value);
                    max_ratio = std::max(max_ratio, value);
                    uniform_coeff = std::min(uniform_coeff, value);
                }
            }
        }
        row.min_value = min_ratio;
        row.max_value = max_ratio;
        row.note = w.decay() ? "declared (C_A, N) checked pointwise"
                             : "no certificate declared; empirical C = min w, N = 0";
        if (!w.decay() && row.pass) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "; uniform pair (%.6g, 0)", uniform_coeff);
            row.note += buf;
        }
        report.rows.push_back(std::move(row));
    }

    // rounding slack when checking declared certificates against the
    // floating-point W_k sums
    const auto cert_tol = [](double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); };

    // (ii) uniform upper bound on W_k
    {
        PropertyResult row{"upper_bound", true, report.min_Wk, report.max_Wk, std::nullopt, ""};
        if (w.bounds()) {
            row.note = "declared C_w^2 = " + std::to_string(w.bounds()->upper);
            const double limit = w.bounds()->upper + cert_tol(w.bounds()->upper);
            if (report.max_Wk > limit) {
                row.pass = false;
                for (std::size_t i = 0; i < W.size(); ++i)
                    if (W[i] > limit) {
                        row.witness = box.freq_at(i);
                        break;
                    }
            }
        } else {
            row.note = "no certificate declared; empirical C_w^2 = max W_k";
        }
        report.rows.push_back(std::move(row));
    }

    // (iii) uniform lower bound on W_k
    {
        PropertyResult row{"lower_bound", true, report.min_Wk, report.max_Wk, std::nullopt, ""};
        if (w.bounds()) {
            row.note = "declared c_w^2 = " + std::to_string(w.bounds()->lower);
            const double limit = w.bounds()->lower - cert_tol(w.bounds()->lower);
            if (report.min_Wk < limit) {
                row.pass = false;
                for (std::size_t i = 0; i < W.size(); ++i)
                    if (W[i] < limit) {
                        row.witness = box.freq_at(i);
                        break;
                    }
            }
        } else {
            row.note = "no certificate declared; empirical c_w^2 = min W_k";
            if (!(report.min_Wk > 0.0)) {
                row.pass = false;
                row.witness = min_witness;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string to_csv(const ValidationReport& report) {
    std::ostringstream out;
    out << "property,pass,min,max,witness_k\n";
    char buf[128];
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g,", row.property.c_str(),
                      row.pass ? "true" : "false", row.min_value, row.max_value);
        out << buf;
        if (row.witness) out << freq_to_string(*row.witness);
        out << "\n";
    }
    return out.str();
}

} // namespace torusct
