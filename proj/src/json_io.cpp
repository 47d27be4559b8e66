#include "torusct/json_io.hpp"

#include <fstream>
#include <set>

#include "torusct/errors.hpp"

namespace torusct {

namespace {

void require_fields(const json& j, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const std::string& what) {
    if (!j.is_object()) throw SchemaError(what + ": expected a JSON object");
    for (const auto& item : j.items()) {
        if (!required.count(item.key()) && !optional.count(item.key()))
            throw SchemaError(what + ": unknown field \"" + item.key() + "\"");
    }
    for (const auto& key : required)
        if (!j.contains(key)) throw SchemaError(what + ": missing field \"" + key + "\"");
}

int get_int(const json& j, const std::string& key, const std::string& what) {
    if (!j.at(key).is_number_integer())
        throw SchemaError(what + ": field \"" + key + "\" must be an integer");
    return j.at(key).get<int>();
}

double get_num(const json& j, const std::string& key, const std::string& what) {
    if (!j.at(key).is_number()) throw SchemaError(what + ": field \"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

} // namespace

json to_json(const Spectrum& f) {
    json j;
    j["n"] = f.box().n();
    j["K"] = f.box().K();
    j["real"] = f.real_flag();
    json coeffs = json::array();
    for (std::size_t i = 0; i < f.box().size(); ++i) {
        const cplx c = f[i];
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        json entry;
        entry["k"] = f.box().freq_at(i);
        entry["re"] = c.real();
        entry["im"] = c.imag();
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Spectrum spectrum_from_json(const json& j) {
    require_fields(j, {"n", "K", "real", "coeffs"}, {}, "Spectrum");
    const int n = get_int(j, "n", "Spectrum");
    const int K = get_int(j, "K", "Spectrum");
    if (n < 1 || K < 0) throw SchemaError("Spectrum: need n >= 1 and K >= 0");
    if (!j.at("real").is_boolean()) throw SchemaError("Spectrum: field \"real\" must be a bool");
    if (!j.at("coeffs").is_array()) throw SchemaError("Spectrum: field \"coeffs\" must be an array");

    const FreqBox box = [&] {
        try {
            return FreqBox(n, K);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("Spectrum: ") + e.what());
        }
    }();
    Spectrum f(box, j.at("real").get<bool>());
    std::set<std::size_t> seen;
    for (const auto& entry : j.at("coeffs")) {
        require_fields(entry, {"k", "re", "im"}, {}, "Spectrum coefficient");
        if (!entry.at("k").is_array() || entry.at("k").size() != static_cast<std::size_t>(n))
            throw SchemaError("Spectrum: coefficient \"k\" must be an array of n integers");
        FreqVec k;
        for (const auto& v : entry.at("k")) {
            if (!v.is_number_integer())
                throw SchemaError("Spectrum: frequency entries must be integers");
            k.push_back(v.get<int>());
        }
        if (!box.contains(k)) throw SchemaError("Spectrum: frequency outside the box");
        const std::size_t idx = box.index_of(k);
        if (!seen.insert(idx).second) throw SchemaError("Spectrum: duplicate frequency");
        f[idx] = cplx{get_num(entry, "re", "Spectrum coefficient"),
                      get_num(entry, "im", "Spectrum coefficient")};
    }
    if (f.real_flag() && !f.is_hermitian())
        throw SchemaError("Spectrum: real flag set but coefficients are not Hermitian");
    return f;
}

json to_json(const Direction& A) {
    json j;
    j["n"] = A.n();
    j["d"] = A.d();
    j["basis"] = A.basis();
    return j;
}

Direction direction_from_json(const json& j) {
    require_fields(j, {"n", "d", "basis"}, {}, "Direction");
    const int n = get_int(j, "n", "Direction");
    const int d = get_int(j, "d", "Direction");
    if (n < 2 || d < 1 || d > n - 1) throw SchemaError("Direction: need n >= 2, 1 <= d <= n-1");
    if (!j.at("basis").is_array() || j.at("basis").size() != static_cast<std::size_t>(d))
        throw SchemaError("Direction: basis must hold d rows");
    IntMat basis;
    for (const auto& row : j.at("basis")) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw SchemaError("Direction: basis rows must hold n integers");
        IntVec r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw SchemaError("Direction: basis entries must be integers");
            r.push_back(v.get<std::int64_t>());
        }
        basis.push_back(std::move(r));
    }
    Direction A = [&] {
        try {
            return canonicalize(basis, n);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("Direction: ") + e.what());
        }
    }();
    if (A.basis() != basis)
        throw SchemaError("Direction: basis is not the canonical (saturated HNF) form");
    return A;
}

json to_json(const DirectionSet& D) {
    json j;
    j["n"] = D.n();
    j["d"] = D.d();
    json dirs = json::array();
    for (const auto& A : D) dirs.push_back(to_json(A));
    j["directions"] = std::move(dirs);
    return j;
}

DirectionSet direction_set_from_json(const json& j) {
    require_fields(j, {"n", "d", "directions"}, {}, "DirectionSet");
    const int n = get_int(j, "n", "DirectionSet");
    const int d = get_int(j, "d", "DirectionSet");
    if (!j.at("directions").is_array())
        throw SchemaError("DirectionSet: field \"directions\" must be an array");
    std::vector<Direction> dirs;
    for (const auto& entry : j.at("directions")) {
        Direction A = direction_from_json(entry);
        if (A.n() != n || A.d() != d) throw SchemaError("DirectionSet: member with mismatched (n,d)");
        if (!dirs.empty() && !(dirs.back() < A))
            throw SchemaError("DirectionSet: directions must be strictly phi-ordered");
        dirs.push_back(std::move(A));
    }
    try {
        return DirectionSet(n, d, std::move(dirs));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("DirectionSet: ") + e.what());
    }
}

json to_json(const Sinogram& g) {
    json j;
    j["directions"] = to_json(g.directions());
    json spectra = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) spectra.push_back(to_json(g.spectrum(i)));
    j["spectra"] = std::move(spectra);
    return j;
}

Sinogram sinogram_from_json(const json& j) {
    require_fields(j, {"directions", "spectra"}, {}, "Sinogram");
    DirectionSet D = direction_set_from_json(j.at("directions"));
    if (!j.at("spectra").is_array())
        throw SchemaError("Sinogram: field \"spectra\" must be an array");
    if (j.at("spectra").size() != D.size())
        throw SchemaError("Sinogram: spectra count must match directions");
    std::vector<Spectrum> spectra;
    for (const auto& entry : j.at("spectra")) spectra.push_back(spectrum_from_json(entry));
    try {
        return Sinogram(std::move(D), std::move(spectra));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("Sinogram: ") + e.what());
    }
}

Weight weight_from_config(const json& j, const DirectionSet& D, const FreqBox& box) {
    require_fields(j, {"kind"}, {"params"}, "Weight config");
    if (!j.at("kind").is_string()) throw SchemaError("Weight config: \"kind\" must be a string");
    const std::string kind = j.at("kind").get<std::string>();
    const json params = j.contains("params") ? j.at("params") : json::object();

    if (kind == "constant") {
        require_fields(params, {}, {"value"}, "constant weight params");
        const double value = params.contains("value") ? get_num(params, "value", "constant weight") : 1.0;
        if (!(value > 0.0)) throw SchemaError("constant weight: value must be > 0");
        return constant_weight(value);
    }
    if (kind == "good") {
        require_fields(params, {"a", "b", "N"}, {"h_value", "exponent"}, "good weight params");
        const double a = get_num(params, "a", "good weight");
        const double b = get_num(params, "b", "good weight");
        const double N = get_num(params, "N", "good weight");
        const double h_value =
            params.contains("h_value") ? get_num(params, "h_value", "good weight") : 0.5 * (a + b);
        const double exponent =
            params.contains("exponent") ? get_num(params, "exponent", "good weight") : 1.0;
        try {
            return good_weight([h_value](const FreqVec&) { return h_value; }, a, b, N, D, box,
                               exponent);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("good weight: ") + e.what());
        }
    }
    if (kind == "partition") {
        require_fields(params, {}, {}, "partition weight params");
        return partition_weight(D, box);
    }
    if (kind == "normalized") {
        require_fields(params, {}, {"base"}, "normalized weight params");
        const Weight base = params.contains("base")
                                ? weight_from_config(params.at("base"), D, box)
                                : constant_weight(1.0);
        return normalize(base, D, box);
    }
    throw SchemaError("Weight config: unknown kind \"" + kind + "\"");
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open for reading: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
}

} // namespace torusct
