// torusct: phantoms, d-plane Radon data, reconstructions, and experiments
// on the flat torus, exchanged as JSON/CSV/PGM files.
//
// Exit codes: 1 usage, 2 schema, 3 covering, 4 weight, 5 numeric.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "torusct/errors.hpp"
#include "torusct/json_io.hpp"
#include "torusct/radon.hpp"
#include "torusct/random.hpp"
#include "torusct/tikhonov.hpp"

using namespace torusct;

namespace {

FreqVec parse_freq(const std::string& text, int n) {
    FreqVec k;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) k.push_back(std::stoi(item));
    if (static_cast<int>(k.size()) != n)
        throw CLI::ValidationError("--at", "expected " + std::to_string(n) + " comma-separated integers");
    return k;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

Weight load_weight(const std::string& path, const DirectionSet& D, const FreqBox& box) {
    if (path.empty()) return constant_weight(1.0);
    return weight_from_config(load_json(path), D, box);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot open for writing: " + path);
    out << text;
}

// output files must not alias any input of the same run
void ensure_distinct(std::initializer_list<std::string> outputs,
                     std::initializer_list<std::string> inputs) {
    for (const auto& out : outputs) {
        if (out.empty()) continue;
        for (const auto& in : inputs)
            if (!in.empty() && in == out)
                throw CLI::ValidationError("--out", "output path equals input path: " + out);
    }
}

double max_coeff_err(const Spectrum& a, const Spectrum& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.box().size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// ---------------------------------------------------------------- phantom

struct PhantomArgs {
    int n = 2;
    int K = 2;
    std::string kind = "random";
    std::uint64_t seed = 0;
    std::string at;
    bool real = false;
    double envelope = 2.0;
    std::string out;
};

void run_phantom(const PhantomArgs& a) {
    const FreqBox box(a.n, a.K);
    Spectrum f(box);
    if (a.kind == "random") {
        f = random_spectrum(box, a.seed, a.envelope, a.real);
    } else if (a.kind == "delta") {
        const FreqVec k = a.at.empty() ? FreqVec(a.n, 0) : parse_freq(a.at, a.n);
        if (!box.contains(k)) throw SchemaError("phantom: --at frequency outside the box");
        f = Spectrum::delta(box, k);
        if (a.real) {
            FreqVec neg(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
            f.set(neg, std::conj(f.at(k)));
            f.set_real_flag(true);
        }
    } else if (a.kind == "bump") {
        // separable Fejer profile: nonnegative, peak at the origin
        for (std::size_t i = 0; i < box.size(); ++i) {
            const FreqVec k = box.freq_at(i);
            double c = 1.0;
            for (int v : k) c *= 1.0 - static_cast<double>(v < 0 ? -v : v) / (a.K + 1);
            f[i] = cplx{c, 0.0};
        }
        f.set_real_flag(true);
    } else {
        throw CLI::ValidationError("--kind", "expected random|delta|bump");
    }
    save_json(to_json(f), a.out);
}

// -------------------------------------------------------------- directions

struct DirectionsArgs {
    int n = 2;
    int d = 1;
    int K = 2;
    int extra = 1;
    std::string out;
};

void run_directions(const DirectionsArgs& a) {
    const FreqBox box(a.n, a.K);
    save_json(to_json(covering_directions(a.n, a.d, box, a.extra)), a.out);
}

// ------------------------------------------------------------------ forward

struct ForwardArgs {
    std::string in;
    std::string directions;
    int d = 0;
    int extra = 1;
    std::string out;
};

void run_forward(const ForwardArgs& a) {
    ensure_distinct({a.out}, {a.in, a.directions});
    const Spectrum f = spectrum_from_json(load_json(a.in));
    DirectionSet D = [&] {
        if (!a.directions.empty()) return direction_set_from_json(load_json(a.directions));
        if (a.d < 1) throw CLI::ValidationError("--d", "give --directions or --d");
        return covering_directions(f.box().n(), a.d, f.box(), a.extra);
    }();
    if (D.n() != f.box().n()) throw SchemaError("forward: phantom and directions disagree on n");
    save_json(to_json(forward(f, D)), a.out);
}

// -------------------------------------------------------------------- noise

struct NoiseArgs {
    std::string in;
    double eps = 0.0;
    double t = 0.0;
    std::string weight;
    std::uint64_t seed = 0;
    std::string out;
};

void run_noise(const NoiseArgs& a) {
    ensure_distinct({a.out}, {a.in, a.weight});
    const Sinogram g = sinogram_from_json(load_json(a.in));
    const Weight w = load_weight(a.weight, g.directions(), g.box());
    save_json(to_json(add_noise(g, w, a.eps, a.t, a.seed)), a.out);
}

// -------------------------------------------------------------- reconstruct

struct ReconstructArgs {
    std::string in;
    std::string mode = "filtered-adjoint";
    std::string weight;
    std::string truth;
    double alpha = 1e-3;
    double s = 0.0;
    double r = 0.0;
    double t = 0.0;
    double delta = 0.0;
    double eps = -1.0;
    bool assert_bound = false;
    std::string out;
    std::string summary;
};

Spectrum reconstruct_slice(const Sinogram& g) {
    const FreqBox& box = g.box();
    const OrthoTable table(box, g.directions());
    // one transverse sample grid per direction, reused across frequencies
    std::vector<std::optional<std::vector<cplx>>> cache(g.size());
    std::vector<int> grid(g.size(), 0);
    Spectrum out(box);
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        const auto& omega = table.omega_indices(i);
        if (omega.empty())
            throw CoveringError("reconstruct: no direction orthogonal to a box frequency");
        const std::size_t a = static_cast<std::size_t>(omega.front());
        const Direction& A = g.directions()[a];
        if (!cache[a]) {
            grid[a] = default_transverse_grid(box, A);
            cache[a] = transverse_samples(g.spectrum(a), A, grid[a]);
        }
        out[i] = slice_invert(*cache[a], grid[a], A, k);
    }
    return out;
}

void run_reconstruct(const ReconstructArgs& a) {
    ensure_distinct({a.out, a.summary}, {a.in, a.weight, a.truth});
    if (a.assert_bound) {
        if (a.mode != "tikhonov")
            throw CLI::ValidationError("--assert-bound", "only valid with --mode tikhonov");
        if (a.truth.empty())
            throw CLI::ValidationError("--assert-bound", "requires --truth");
        if (a.eps < 0.0)
            throw CLI::ValidationError("--assert-bound", "requires --eps (the noise level)");
    }
    const Sinogram g = sinogram_from_json(load_json(a.in));
    const Weight w = load_weight(a.weight, g.directions(), g.box());

    Spectrum rec(g.box());
    if (a.mode == "filtered-adjoint") {
        rec = invert_filtered_adjoint(g, w);
    } else if (a.mode == "bp-sum") {
        rec = invert_bp_sum(g, w);
    } else if (a.mode == "slice") {
        rec = reconstruct_slice(g);
    } else if (a.mode == "tikhonov") {
        TikhonovConfig cfg{a.alpha, a.s, a.r, a.t, a.delta, w};
        rec = tikhonov_solve(g, cfg);
    } else {
        throw CLI::ValidationError("--mode", "expected filtered-adjoint|bp-sum|slice|tikhonov");
    }
    save_json(to_json(rec), a.out);

    const NormalMultiplier nm = normal_multiplier(w, g.directions(), g.box());
    std::ostringstream csv;
    csv << "mode,max_err,hs_error,s,wk_min,wk_max,bound,bound_pass\n";
    char buf[256];
    std::string bound_col = ",", err_cols = ",";
    if (!a.truth.empty()) {
        const Spectrum truth = spectrum_from_json(load_json(a.truth));
        if (truth.box() != g.box()) throw SchemaError("reconstruct: truth box mismatch");
        const double max_err = max_coeff_err(rec, truth);
        const double hs_err = hs_norm(rec - truth, a.s);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", max_err, hs_err);
        err_cols = buf;
        if (a.assert_bound) {
            // the solve operator is P_{w,s-r} R*, so the rate applies with
            // penalty scale s-r and error scale r
            TikhonovConfig rate_cfg{a.alpha, a.s - a.r, a.r, a.t, a.delta, w};
            const double bound = rate_bound(rate_cfg, hs_norm(truth, a.r + a.delta), a.eps);
            const double lhs = hs_norm(rec - truth, a.r);
            const bool pass = lhs <= bound;
            std::snprintf(buf, sizeof(buf), "%.17g,%s", bound, pass ? "true" : "false");
            bound_col = buf;
            if (!pass)
                throw NumericError("reconstruct: H^r error exceeds the quantitative rate bound");
        }
    }
    std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g,%.17g,%s\n", a.mode.c_str(),
                  err_cols.c_str(), a.s, nm.min_Wk, nm.max_Wk, bound_col.c_str());
    csv << buf;
    if (!a.summary.empty()) write_text(a.summary, csv.str());
}

// --------------------------------------------------------------- experiment

struct RegstratArgs {
    std::string truth;
    std::string directions;
    int d = 0;
    std::string weight;
    double s = 1.0;
    double r = 0.0;
    double t = 0.0;
    double delta = 1.0;
    std::string eps = "1e-2,1e-4,1e-6";
    std::uint64_t seed = 0;
    std::string out;
};

void run_regstrat(const RegstratArgs& a) {
    ensure_distinct({a.out}, {a.truth, a.directions, a.weight});
    const Spectrum f = spectrum_from_json(load_json(a.truth));
    const DirectionSet D = [&] {
        if (!a.directions.empty()) return direction_set_from_json(load_json(a.directions));
        if (a.d < 1) throw CLI::ValidationError("--d", "give --directions or --d");
        return covering_directions(f.box().n(), a.d, f.box(), 1);
    }();
    const Weight w = load_weight(a.weight, D, f.box());
    const TikhonovConfig cfg{0.0, a.s, a.r, a.t, a.delta, w};
    const auto reports = regstrat_experiment(f, cfg, D, parse_list(a.eps), nullptr, a.seed);
    write_text(a.out, regstrat_csv(reports, a.seed));
}

struct StabilityArgs {
    std::string truth;
    std::string directions;
    int d = 0;
    std::string weight;
    double s = 0.0;
    std::string p = "1.5,2";
    std::string out;
};

void run_stability(const StabilityArgs& a) {
    ensure_distinct({a.out}, {a.truth, a.directions, a.weight});
    const Spectrum f = spectrum_from_json(load_json(a.truth));
    const DirectionSet D = [&] {
        if (!a.directions.empty()) return direction_set_from_json(load_json(a.directions));
        if (a.d < 1) throw CLI::ValidationError("--d", "give --directions or --d");
        return covering_directions(f.box().n(), a.d, f.box(), 1);
    }();
    const Weight w = load_weight(a.weight, D, f.box());
    std::vector<StabilityRow> rows;
    for (double p : parse_list(a.p)) rows.push_back(stability_report(f, w, D, a.s, p));
    write_text(a.out, stability_csv(rows));
}

// ----------------------------------------------------------- validate-weight

struct ValidateArgs {
    std::string weight;
    int n = 2;
    int d = 1;
    int K = 2;
    std::string directions;
    std::string out;
};

void run_validate(const ValidateArgs& a) {
    ensure_distinct({a.out}, {a.weight, a.directions});
    const FreqBox box(a.n, a.K);
    const DirectionSet D = a.directions.empty()
                               ? covering_directions(a.n, a.d, box, 1)
                               : direction_set_from_json(load_json(a.directions));
    const Weight w = load_weight(a.weight, D, box);
    const std::string csv = to_csv(validate(w, D, box));
    if (a.out.empty())
        std::cout << csv;
    else
        write_text(a.out, csv);
}

// -------------------------------------------------------------------- render

struct RenderArgs {
    std::string in;
    int N = 256;
    std::string out;
};

void run_render(const RenderArgs& a) {
    ensure_distinct({a.out}, {a.in});
    const Spectrum f = spectrum_from_json(load_json(a.in));
    if (f.box().n() != 2) throw std::invalid_argument("render: only n = 2 spectra can be rendered");
    if (a.N < 1) throw CLI::ValidationError("--N", "N must be >= 1");
    const auto samples = evaluate_grid(f, a.N);

    // pixel (row, col) holds the real part at x = (row/N, col/N)
    double lo = samples[0].real(), hi = samples[0].real();
    for (const auto& v : samples) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
    }
    const double range = hi > lo ? hi - lo : 1.0;
    std::string bytes(samples.size(), '\0');
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double u = (samples[i].real() - lo) / range;
        bytes[i] = static_cast<char>(static_cast<unsigned char>(std::lround(u * 255.0)));
    }
    char header[128];
    std::snprintf(header, sizeof(header), "P5\n# min=%.17g max=%.17g\n%d %d\n255\n", lo, hi, a.N,
                  a.N);
    write_text(a.out, std::string(header) + bytes);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-plane Radon transforms, inversion, and Tikhonov regularization on T^n"};
    app.require_subcommand(1);

    PhantomArgs pa;
    auto* phantom = app.add_subcommand("phantom", "write a band-limited phantom spectrum");
    phantom->add_option("--n", pa.n, "ambient dimension")->check(CLI::PositiveNumber);
    phantom->add_option("--K", pa.K, "band limit")->check(CLI::NonNegativeNumber);
    phantom->add_option("--kind", pa.kind, "random|delta|bump");
    phantom->add_option("--seed", pa.seed, "random seed");
    phantom->add_option("--at", pa.at, "delta frequency, comma separated");
    phantom->add_flag("--real", pa.real, "enforce Hermitian symmetry");
    phantom->add_option("--envelope", pa.envelope, "random decay exponent");
    phantom->add_option("--out", pa.out, "output spectrum JSON")->required();

    DirectionsArgs da;
    auto* directions = app.add_subcommand("directions", "write a covering direction set");
    directions->add_option("--n", da.n)->check(CLI::PositiveNumber);
    directions->add_option("--d", da.d)->check(CLI::PositiveNumber);
    directions->add_option("--K", da.K)->check(CLI::NonNegativeNumber);
    directions->add_option("--extra", da.extra, "d-subsets per complement (d < n-1)");
    directions->add_option("--out", da.out)->required();

    ForwardArgs fa;
    auto* fwd = app.add_subcommand("forward", "apply the d-plane transform to a phantom");
    fwd->add_option("--in", fa.in, "phantom spectrum JSON")->required();
    fwd->add_option("--directions", fa.directions, "direction set JSON");
    fwd->add_option("--d", fa.d, "build a covering set of this plane dimension");
    fwd->add_option("--extra", fa.extra);
    fwd->add_option("--out", fa.out, "output sinogram JSON")->required();

    NoiseArgs na;
    auto* noise = app.add_subcommand("noise", "perturb a sinogram to an exact data-norm level");
    noise->add_option("--in", na.in)->required();
    noise->add_option("--eps", na.eps, "target perturbation norm")->required();
    noise->add_option("--t", na.t, "noise-norm Sobolev scale");
    noise->add_option("--weight", na.weight, "weight config JSON");
    noise->add_option("--seed", na.seed);
    noise->add_option("--out", na.out)->required();

    ReconstructArgs ra;
    auto* rec = app.add_subcommand("reconstruct", "invert a sinogram");
    rec->add_option("--in", ra.in)->required();
    rec->add_option("--mode", ra.mode, "filtered-adjoint|bp-sum|slice|tikhonov");
    rec->add_option("--weight", ra.weight, "weight config JSON");
    rec->add_option("--truth", ra.truth, "ground-truth spectrum for error reporting");
    rec->add_option("--alpha", ra.alpha)->check(CLI::PositiveNumber);
    rec->add_option("--s", ra.s);
    rec->add_option("--r", ra.r);
    rec->add_option("--t", ra.t);
    rec->add_option("--delta", ra.delta);
    rec->add_option("--eps", ra.eps, "known noise level for --assert-bound");
    rec->add_flag("--assert-bound", ra.assert_bound, "fail unless the H^r error meets the rate bound");
    rec->add_option("--out", ra.out, "reconstructed spectrum JSON")->required();
    rec->add_option("--summary", ra.summary, "CSV summary path");

    auto* exp = app.add_subcommand("experiment", "parameter-sweep experiments");
    exp->require_subcommand(1);
    RegstratArgs ga;
    auto* regstrat = exp->add_subcommand("regstrat", "regularization strategy sweep");
    regstrat->add_option("--truth", ga.truth)->required();
    regstrat->add_option("--directions", ga.directions);
    regstrat->add_option("--d", ga.d);
    regstrat->add_option("--weight", ga.weight);
    regstrat->add_option("--s", ga.s);
    regstrat->add_option("--r", ga.r);
    regstrat->add_option("--t", ga.t);
    regstrat->add_option("--delta", ga.delta);
    regstrat->add_option("--eps", ga.eps, "comma-separated noise levels");
    regstrat->add_option("--seed", ga.seed);
    regstrat->add_option("--out", ga.out)->required();

    StabilityArgs sa;
    auto* stability = exp->add_subcommand("stability", "stability-estimate report");
    stability->add_option("--truth", sa.truth)->required();
    stability->add_option("--directions", sa.directions);
    stability->add_option("--d", sa.d);
    stability->add_option("--weight", sa.weight);
    stability->add_option("--s", sa.s);
    stability->add_option("--p", sa.p, "comma-separated Lebesgue exponents");
    stability->add_option("--out", sa.out)->required();

    ValidateArgs va;
    auto* validate_cmd = app.add_subcommand("validate-weight", "check weight properties");
    validate_cmd->add_option("--weight", va.weight, "weight config JSON");
    validate_cmd->add_option("--n", va.n)->check(CLI::PositiveNumber);
    validate_cmd->add_option("--d", va.d)->check(CLI::PositiveNumber);
    validate_cmd->add_option("--K", va.K)->check(CLI::NonNegativeNumber);
    validate_cmd->add_option("--directions", va.directions);
    validate_cmd->add_option("--out", va.out, "CSV path (stdout when omitted)");

    RenderArgs rra;
    auto* render = app.add_subcommand("render", "rasterize the real part to a PGM image (n = 2)");
    render->add_option("--in", rra.in)->required();
    render->add_option("--N", rra.N, "image side length");
    render->add_option("--out", rra.out)->required();

    try {
        app.parse(argc, argv);
        if (*phantom) run_phantom(pa);
        if (*directions) run_directions(da);
        if (*fwd) run_forward(fa);
        if (*noise) run_noise(na);
        if (*rec) run_reconstruct(ra);
        if (*regstrat) run_regstrat(ga);
        if (*stability) run_stability(sa);
        if (*validate_cmd) run_validate(va);
        if (*render) run_render(rra);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const CoveringError& e) {
        std::cerr << "covering error: " << e.what() << "\n";
        return 3;
    } catch (const WeightError& e) {
        std::cerr << "weight error: " << e.what() << "\n";
        return 4;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
