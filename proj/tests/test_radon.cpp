#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torusct/errors.hpp"
#include "torusct/radon.hpp"
#include "torusct/random.hpp"

using namespace torusct;

namespace {

double max_coeff_diff(const Spectrum& a, const Spectrum& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.box().size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("forward: slice identity masks frequencies") {
    const FreqBox box(2, 1);
    const DirectionSet D(2, 1, {canonicalize({{1, 0}}, 2)});

    // e^{2 pi i x_2} survives along span{(1,0)}; e^{2 pi i x_1} does not
    const Spectrum f2 = Spectrum::delta(box, {0, 1});
    const Sinogram g2 = forward(f2, D);
    CHECK(g2.spectrum(0).at({0, 1}) == cplx{1.0, 0.0});

    const Spectrum f1 = Spectrum::delta(box, {1, 0});
    const Sinogram g1 = forward(f1, D);
    for (std::size_t i = 0; i < box.size(); ++i) CHECK(g1.spectrum(0)[i] == cplx{0.0, 0.0});

    const DirectionSet Dfull = covering_directions(2, 1, box);
    Spectrum c(box);
    c.set({0, 0}, cplx{0.7, -0.2});
    const Sinogram gc = forward(c, Dfull);
    for (std::size_t a = 0; a < gc.size(); ++a)
        CHECK(gc.spectrum(a).at({0, 0}) == cplx{0.7, -0.2});
}

TEST_CASE("forward: output vanishes off the orthogonal slice") {
    const FreqBox box(3, 2);
    const DirectionSet D = covering_directions(3, 2, box);
    const Spectrum f = random_spectrum(box, 17);
    const Sinogram g = forward(f, D);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t i = 0; i < box.size(); ++i) {
            if (is_orthogonal(box.freq_at(i), D[a]))
                CHECK(g.spectrum(a)[i] == f[i]);
            else
                CHECK(g.spectrum(a)[i] == cplx{0.0, 0.0});
        }
}

TEST_CASE("forward_quadrature: agreement with the slice route") {
    // n=2, d=1, wrapped direction
    {
        const FreqBox box(2, 2);
        const Direction A = canonicalize({{1, 2}}, 2);
        const Spectrum f = random_spectrum(box, 23);
        const int M = quadrature_min_points(box, A);
        CHECK(M == 7); // max |k.(1,2)| = 6 over the K=2 box
        const Spectrum oracle = forward_quadrature(f, A, 11);
        CHECK(max_coeff_diff(oracle, forward_quadrature(f, A, M)) < 1e-12);
        const Sinogram g = forward(f, DirectionSet(2, 1, {A}));
        CHECK(max_coeff_diff(oracle, g.spectrum(0)) < 1e-10);
    }
    // n=3, d=2 axis plane: f = e^{2 pi i x_3} is constant along the plane
    {
        const FreqBox box(3, 1);
        const Direction A = canonicalize({{1, 0, 0}, {0, 1, 0}}, 3);
        const Spectrum f = Spectrum::delta(box, {0, 0, 1});
        const Spectrum out = forward_quadrature(f, A, quadrature_min_points(box, A));
        CHECK(max_coeff_diff(out, f) < 1e-12);
    }
}

TEST_CASE("forward_quadrature: constants and the Nyquist gate") {
    const FreqBox box0(2, 0);
    const Direction A = canonicalize({{1, 1}}, 2);
    Spectrum c(box0);
    c.set({0, 0}, cplx{2.0, 1.0});
    for (int M : {1, 2, 5}) CHECK(max_coeff_diff(forward_quadrature(c, A, M), c) < 1e-13);

    const FreqBox box(2, 2);
    const Spectrum f = random_spectrum(box, 29);
    // max |k.(1,1)| = 4 over the K=2 box
    CHECK_THROWS_WITH_AS(forward_quadrature(f, A, 4),
                         "forward_quadrature: M = 4 below Nyquist bound, need M >= 5",
                         std::invalid_argument);
}

TEST_CASE("slice_invert: recovers coefficients from transverse samples") {
    const FreqBox box(2, 1);
    const Direction A = canonicalize({{1, 0}}, 2);
    const Spectrum f = Spectrum::delta(box, {0, 1});
    const Sinogram g = forward(f, DirectionSet(2, 1, {A}));
    const int G = default_transverse_grid(box, A);
    const auto samples = transverse_samples(g.spectrum(0), A, G);
    const cplx rec = slice_invert(samples, G, A, {0, 1});
    CHECK(std::abs(rec - cplx{1.0, 0.0}) < 1e-12);

    // k = 0 returns the mean
    Spectrum h = random_spectrum(box, 31);
    const Sinogram gh = forward(h, DirectionSet(2, 1, {A}));
    const auto sh = transverse_samples(gh.spectrum(0), A, G);
    CHECK(std::abs(slice_invert(sh, G, A, {0, 0}) - h.at({0, 0})) < 1e-12);

    CHECK_THROWS_AS(slice_invert(samples, G, A, {1, 1}), std::invalid_argument);
}

TEST_CASE("slice_invert: smoothing variant undoes a Bessel pre-filter") {
    const FreqBox box(2, 1);
    const Direction A = canonicalize({{1, 0}}, 2);
    const Spectrum f = random_spectrum(box, 37);
    const double s = 1.0;
    // h = (1-Delta)^{-s} f on the data side
    const Spectrum h = apply_multiplier(
        f, [s](const FreqVec& k) { return cplx{std::pow(bracket(k), -2.0 * s), 0.0}; });
    const Sinogram gh = forward(h, DirectionSet(2, 1, {A}));
    const int G = default_transverse_grid(box, A);
    const auto samples = transverse_samples(gh.spectrum(0), A, G);
    const FreqVec k{0, 1};
    CHECK(std::abs(slice_invert(samples, G, A, k, s) - f.at(k)) < 1e-12);
}

TEST_CASE("slice_invert: wrapped direction with determinant 2") {
    const FreqBox box(2, 2);
    const Direction A = canonicalize({{1, 2}}, 2);
    REQUIRE(transverse_frame(A).det == 2);
    const Spectrum f = random_spectrum(box, 41);
    const Sinogram g = forward(f, DirectionSet(2, 1, {A}));
    const int G = default_transverse_grid(box, A);
    const auto samples = transverse_samples(g.spectrum(0), A, G);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        if (!is_orthogonal(k, A)) continue;
        CHECK(std::abs(slice_invert(samples, G, A, k) - f.at(k)) < 1e-10);
    }
}

TEST_CASE("adjoint: one-direction case and the pairing identity") {
    const FreqBox box(2, 2);
    const Direction A = canonicalize({{1, 0}}, 2);
    const DirectionSet single(2, 1, {A});
    const Weight w = constant_weight(1.0);

    const Spectrum gdata = random_spectrum(box, 43);
    const Sinogram g(single, {gdata});
    const Spectrum back = adjoint(g, w);
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (is_orthogonal(box.freq_at(i), A))
            CHECK(back[i] == gdata[i]);
        else
            CHECK(back[i] == cplx{0.0, 0.0});
    }

    // <R_d f, g>_{L_s^{2,2}(w)} == <f, R_d^* g>_{H^s}, both from their sums
    int seed = 50;
    for (int n : {2, 3}) {
        for (int d : {1, n - 1}) {
            const FreqBox b(n, 2);
            const DirectionSet D = covering_directions(n, d, b);
            const Weight wt = good_weight([](const FreqVec&) { return 1.5; }, 1.0, 2.0, 2.0, D, b);
            const Spectrum f = random_spectrum(b, static_cast<std::uint64_t>(seed++));
            std::vector<Spectrum> spectra;
            for (std::size_t i = 0; i < D.size(); ++i)
                spectra.push_back(random_spectrum(b, static_cast<std::uint64_t>(seed++)));
            const Sinogram gg(D, spectra);
            const Sinogram rf = forward(f, D);
            for (double s : {-1.0, 0.0, 1.0, 2.0}) {
                const cplx lhs = data_inner(rf, gg, wt, s);
                const cplx rhs = hs_inner(f, adjoint(gg, wt), s);
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("normal_multiplier: diagonal values and flags") {
    const FreqBox box(3, 1);
    const DirectionSet D = covering_directions(3, 2, box);
    const Weight w = constant_weight(1.0);
    const NormalMultiplier nm = normal_multiplier(w, D, box);
    CHECK(nm.uncovered.empty());
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        bool zero = true;
        for (int v : k) zero = zero && v == 0;
        if (zero)
            CHECK(nm.W[i] == doctest::Approx(static_cast<double>(D.size())));
        else
            CHECK(nm.W[i] == doctest::Approx(1.0)); // unique orthogonal plane
    }

    // a single direction cannot cover the whole box
    const DirectionSet single(3, 2, {canonicalize({{1, 0, 0}, {0, 1, 0}}, 3)});
    const NormalMultiplier partial = normal_multiplier(w, single, box);
    CHECK_FALSE(partial.uncovered.empty());
    CHECK(partial.min_Wk == 0.0);
}

TEST_CASE("normal multiplier equals the direct weighted sum for good weights") {
    const FreqBox box(2, 1);
    const DirectionSet D = covering_directions(2, 1, box);
    const double a = 2.0;
    const Weight w = good_weight([a](const FreqVec&) { return a; }, a, a, 0.0, D, box);
    const NormalMultiplier nm = normal_multiplier(w, D, box);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const auto omega = omega_k(box.freq_at(i), D);
        double direct = 0.0;
        for (std::size_t r = 0; r < omega.size(); ++r) {
            const double v = w(box.freq_at(i), omega[r]);
            direct += v * v;
        }
        CHECK(nm.W[i] == doctest::Approx(direct).epsilon(1e-15));
        // lower bound of the construction: a^2 sum i^{-2} <= W_k
        double lower = 0.0;
        for (std::size_t r = 1; r <= omega.size(); ++r) lower += a * a / (static_cast<double>(r) * r);
        CHECK(nm.W[i] >= lower - 1e-12);
    }
}

TEST_CASE("adjoint of forward data is the normal multiplier, and inversion is exact") {
    int seed = 90;
    for (int n : {2, 3}) {
        const int K = n == 2 ? 3 : 2;
        const FreqBox box(n, K);
        for (int d : {1, n - 1}) {
            const DirectionSet D = covering_directions(n, d, box);
            const Weight w = good_weight([](const FreqVec&) { return 1.2; }, 1.0, 2.0, 1.0, D, box);
            const NormalMultiplier nm = normal_multiplier(w, D, box);
            const Spectrum f = random_spectrum(box, static_cast<std::uint64_t>(seed++));
            const Sinogram g = forward(f, D);
            const Spectrum normal = adjoint(g, w);
            for (std::size_t i = 0; i < box.size(); ++i)
                CHECK(std::abs(normal[i] - nm.W[i] * f[i]) < 1e-12);
            const Spectrum rec = invert_filtered_adjoint(g, w);
            CHECK(max_coeff_diff(rec, f) < 1e-10);
        }
    }
}

TEST_CASE("invert_filtered_adjoint: zero data, uncovered errors") {
    const FreqBox box(2, 1);
    const DirectionSet D = covering_directions(2, 1, box);
    const Weight w = constant_weight(1.0);
    std::vector<Spectrum> zero(D.size(), Spectrum(box));
    const Spectrum rec = invert_filtered_adjoint(Sinogram(D, zero), w);
    for (std::size_t i = 0; i < box.size(); ++i) CHECK(rec[i] == cplx{0.0, 0.0});

    const DirectionSet single(2, 1, {canonicalize({{1, 0}}, 2)});
    std::vector<Spectrum> z1(1, Spectrum(box));
    CHECK_THROWS_AS(invert_filtered_adjoint(Sinogram(single, z1), w), CoveringError);
}

TEST_CASE("invert_filtered_adjoint: 1/c_w-Lipschitz in the data") {
    const FreqBox box(2, 2);
    const DirectionSet D = covering_directions(2, 1, box);
    const Weight wn = normalize(constant_weight(1.0), D, box); // c_w = 1
    const Spectrum f = random_spectrum(box, 201);
    const Sinogram clean = forward(f, D);
    Rng rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Spectrum> noise;
        for (std::size_t a = 0; a < D.size(); ++a) {
            Spectrum e(box);
            for (std::size_t i = 0; i < box.size(); ++i) e[i] = rng.complex_gaussian();
            noise.push_back(std::move(e));
        }
        const Sinogram perturbation(D, noise);
        for (double s : {0.0, 1.0}) {
            const double eps = data_norm(perturbation, wn, s, 2.0, 2.0);
            const Spectrum rec = invert_filtered_adjoint(clean + perturbation, wn);
            CHECK(hs_norm(rec - f, s) <= eps * (1.0 + 1e-12) + 1e-12);
        }
    }
}

TEST_CASE("adjoint with normalized weight inverts forward exactly") {
    const FreqBox box(2, 2);
    const DirectionSet D = covering_directions(2, 1, box);
    const Weight wn = normalize(good_weight([](const FreqVec&) { return 1.0; }, 1.0, 1.0, 1.0, D, box),
                                D, box);
    const Spectrum f = random_spectrum(box, 101);
    const Spectrum rec = adjoint(forward(f, D), wn);
    CHECK(max_coeff_diff(rec, f) < 1e-12);
}

TEST_CASE("invert_bp_sum: partition weights and the zero-mean plain sum") {
    // partition weight route, d < n-1
    {
        const FreqBox box(3, 1);
        const DirectionSet D = covering_directions(3, 1, box);
        const Weight w1 = partition_weight(D, box);
        const Spectrum f = random_spectrum(box, 103);
        const Spectrum rec = invert_bp_sum(forward(f, D), w1);
        CHECK(max_coeff_diff(rec, f) < 1e-10);
    }
    // constants are recovered by any valid partition
    {
        const FreqBox box(2, 1);
        const DirectionSet D = covering_directions(2, 1, box);
        const Weight w1 = partition_weight(D, box);
        Spectrum c(box);
        c.set({0, 0}, cplx{3.0, -1.0});
        CHECK(max_coeff_diff(invert_bp_sum(forward(c, D), w1), c) < 1e-12);
    }
    // d = n-1, zero-mean: unweighted sum of the data equals f
    {
        const FreqBox box(2, 2);
        const DirectionSet D = covering_directions(2, 1, box);
        Spectrum f = random_spectrum(box, 107);
        f.set({0, 0}, cplx{0.0, 0.0});
        const Sinogram g = forward(f, D);
        Spectrum plain(box);
        for (std::size_t a = 0; a < g.size(); ++a) plain += g.spectrum(a);
        CHECK(max_coeff_diff(plain, f) < 1e-10);

        // same through invert_bp_sum with w = 1 off origin
        const double m = static_cast<double>(D.size());
        const Weight w1("bp", [m](const FreqVec& k, const Direction&) {
            for (int v : k)
                if (v != 0) return 1.0;
            return 1.0 / m;
        });
        CHECK(max_coeff_diff(invert_bp_sum(g, w1), f) < 1e-10);
    }
    // a non-partition weight is rejected
    {
        const FreqBox box(2, 1);
        const DirectionSet D = covering_directions(2, 1, box);
        const Spectrum f = random_spectrum(box, 109);
        CHECK_THROWS_AS(invert_bp_sum(forward(f, D), constant_weight(1.0)), WeightError);
    }
}

TEST_CASE("multiplier commutation with the forward transform") {
    const FreqBox box(2, 2);
    const DirectionSet D = covering_directions(2, 1, box);
    const Spectrum f = random_spectrum(box, 113);
    const auto m = [](const FreqVec& k) { return cplx{bracket(k), -0.3}; };
    const Sinogram lhs = forward(apply_multiplier(f, m), D);
    const Sinogram rf = forward(f, D);
    for (std::size_t a = 0; a < D.size(); ++a) {
        const Spectrum rhs = apply_multiplier(rf.spectrum(a), m);
        for (std::size_t i = 0; i < box.size(); ++i) CHECK(lhs.spectrum(a)[i] == rhs[i]);
    }
}

TEST_CASE("per-direction transform is non-expansive on every H^s") {
    const FreqBox box(3, 2);
    const DirectionSet D = covering_directions(3, 2, box);
    for (int seed = 0; seed < 5; ++seed) {
        const Spectrum f = random_spectrum(box, static_cast<std::uint64_t>(120 + seed));
        const Sinogram g = forward(f, D);
        for (std::size_t a = 0; a < D.size(); ++a)
            for (double s : {-1.0, 0.0, 1.0, 2.0})
                CHECK(hs_norm(g.spectrum(a), s) <= hs_norm(f, s) + 1e-12);
    }
}

TEST_CASE("stability: H^s norm bounded through the data norm") {
    const FreqBox box(2, 2);
    const DirectionSet D = covering_directions(2, 1, box);
    const Weight w = good_weight([](const FreqVec&) { return 1.5; }, 1.0, 2.0, 2.0, D, box);
    const NormalMultiplier nm = normal_multiplier(w, D, box);
    const double c_hat = std::sqrt(nm.min_Wk);
    for (int seed = 0; seed < 10; ++seed) {
        const Spectrum f = random_spectrum(box, static_cast<std::uint64_t>(140 + seed));
        for (double s : {-1.0, 0.0, 1.0})
            CHECK(hs_norm(f, s) <= data_norm(forward(f, D), w, s, 2.0, 2.0) / c_hat + 1e-12);
    }
}
