#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusct/errors.hpp"
#include "torusct/json_io.hpp"
#include "torusct/radon.hpp"
#include "torusct/random.hpp"

using namespace torusct;

TEST_CASE("spectrum JSON: round trip, zero dropping, determinism") {
    const FreqBox box(2, 2);
    Spectrum f = random_spectrum(box, 5, 2.0, true);
    f.set({1, 1}, cplx{0.0, 0.0});
    f.set({-1, -1}, cplx{0.0, 0.0});
    const json j = to_json(f);
    for (const auto& entry : j.at("coeffs"))
        CHECK((entry.at("re").get<double>() != 0.0 || entry.at("im").get<double>() != 0.0));
    const Spectrum back = spectrum_from_json(j);
    CHECK(back.box() == box);
    CHECK(back.real_flag());
    for (std::size_t i = 0; i < box.size(); ++i) CHECK(back[i] == f[i]);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("spectrum JSON: schema violations rejected") {
    json j = to_json(Spectrum::delta(FreqBox(2, 1), {1, 0}));
    j["extra"] = 1;
    CHECK_THROWS_AS(spectrum_from_json(j), SchemaError);
    j.erase("extra");
    j.erase("real");
    CHECK_THROWS_AS(spectrum_from_json(j), SchemaError);

    // frequency outside the box
    CHECK_THROWS_AS(spectrum_from_json(json::parse(
                        R"({"n":2,"K":1,"real":false,"coeffs":[{"k":[2,0],"re":1.0,"im":0.0}]})")),
                    SchemaError);
    // duplicate frequency
    CHECK_THROWS_AS(
        spectrum_from_json(json::parse(
            R"({"n":2,"K":1,"real":false,"coeffs":[{"k":[1,0],"re":1.0,"im":0.0},{"k":[1,0],"re":2.0,"im":0.0}]})")),
        SchemaError);
    // real flag with non-Hermitian coefficients
    CHECK_THROWS_AS(spectrum_from_json(json::parse(
                        R"({"n":2,"K":1,"real":true,"coeffs":[{"k":[1,0],"re":1.0,"im":0.0}]})")),
                    SchemaError);
    // unknown field inside a coefficient
    CHECK_THROWS_AS(
        spectrum_from_json(json::parse(
            R"({"n":2,"K":1,"real":false,"coeffs":[{"k":[1,0],"re":1.0,"im":0.0,"abs":1.0}]})")),
        SchemaError);
    // a box too large to materialize
    CHECK_THROWS_AS(spectrum_from_json(json::parse(R"({"n":64,"K":3,"real":false,"coeffs":[]})")),
                    SchemaError);
}

TEST_CASE("direction JSON: canonical form enforced") {
    const Direction A = canonicalize({{1, 2}}, 2);
    CHECK(direction_from_json(to_json(A)) == A);
    // (2,4) spans the same line but is not the canonical basis
    CHECK_THROWS_AS(direction_from_json(json::parse(R"({"n":2,"d":1,"basis":[[2,4]]})")),
                    SchemaError);
    CHECK_THROWS_AS(direction_from_json(json::parse(R"({"n":2,"d":2,"basis":[[1,0],[2,0]]})")),
                    SchemaError);
}

TEST_CASE("direction set JSON: phi order enforced") {
    const FreqBox box(2, 1);
    const DirectionSet D = covering_directions(2, 1, box);
    const json j = to_json(D);
    CHECK(direction_set_from_json(j) == D);

    json reversed = j;
    std::reverse(reversed.at("directions").begin(), reversed.at("directions").end());
    CHECK_THROWS_AS(direction_set_from_json(reversed), SchemaError);
}

TEST_CASE("sinogram JSON: alignment and round trip") {
    const FreqBox box(2, 1);
    const DirectionSet D = covering_directions(2, 1, box);
    const Sinogram g = forward(random_spectrum(box, 9), D);
    const json j = to_json(g);
    const Sinogram back = sinogram_from_json(j);
    CHECK(back.directions() == g.directions());
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t i = 0; i < box.size(); ++i)
            CHECK(back.spectrum(a)[i] == g.spectrum(a)[i]);

    json bad = j;
    bad.at("spectra").erase(0);
    CHECK_THROWS_AS(sinogram_from_json(bad), SchemaError);
}

TEST_CASE("weight config parsing") {
    const FreqBox box(2, 1);
    const DirectionSet D = covering_directions(2, 1, box);

    const Weight c = weight_from_config(json::parse(R"({"kind":"constant"})"), D, box);
    CHECK(c({0, 0}, D[0]) == 1.0);
    const Weight c2 =
        weight_from_config(json::parse(R"({"kind":"constant","params":{"value":2.5}})"), D, box);
    CHECK(c2({1, 0}, D[0]) == 2.5);

    const Weight g = weight_from_config(
        json::parse(R"({"kind":"good","params":{"a":1.0,"b":2.0,"N":2}})"), D, box);
    CHECK(g.bounds().has_value());
    CHECK(g.decay().has_value());

    const Weight p = weight_from_config(json::parse(R"({"kind":"partition"})"), D, box);
    const auto omega = omega_k({1, 0}, D);
    double sum = 0.0;
    for (const auto& A : omega) sum += p({1, 0}, A);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));

    const Weight n = weight_from_config(
        json::parse(R"({"kind":"normalized","params":{"base":{"kind":"constant"}}})"), D, box);
    REQUIRE(n.bounds().has_value());
    CHECK(n.bounds()->lower == 1.0);

    CHECK_THROWS_AS(weight_from_config(json::parse(R"({"kind":"mystery"})"), D, box), SchemaError);
    CHECK_THROWS_AS(
        weight_from_config(json::parse(R"({"kind":"good","params":{"a":0.0,"b":1.0,"N":0}})"), D,
                           box),
        SchemaError);
    CHECK_THROWS_AS(
        weight_from_config(json::parse(R"({"kind":"constant","params":{"valeu":1.0}})"), D, box),
        SchemaError);
}

TEST_CASE("file round trip") {
    const FreqBox box(2, 1);
    const Spectrum f = random_spectrum(box, 13);
    const std::string path = "/tmp/torusct_test_spectrum.json";
    save_json(to_json(f), path);
    const Spectrum back = spectrum_from_json(load_json(path));
    for (std::size_t i = 0; i < box.size(); ++i) CHECK(back[i] == f[i]);
    CHECK_THROWS_AS(load_json("/tmp/torusct_missing_file.json"), SchemaError);
}
