#pragma once

#include <json.hpp>
#include <string>

#include "torusct/sinogram.hpp"
#include "torusct/weight.hpp"

namespace torusct {

using json = nlohmann::ordered_json;

// Writers emit fields in a fixed order and list coefficients in the
// box's lexicographic frequency order, so identical objects serialize to
// identical bytes. Readers reject unknown fields and any invariant
// violation with SchemaError.

json to_json(const Spectrum& f);
Spectrum spectrum_from_json(const json& j);

json to_json(const Direction& A);
Direction direction_from_json(const json& j);

json to_json(const DirectionSet& D);
DirectionSet direction_set_from_json(const json& j);

json to_json(const Sinogram& g);
Sinogram sinogram_from_json(const json& j);

/// Weight config: {"kind": "constant"|"good"|"partition"|"normalized",
/// "params": {...}}. "good" takes {a, b, N, h_value?, exponent?};
/// "normalized" takes {base?: <config>} (constant 1 by default).
Weight weight_from_config(const json& j, const DirectionSet& D, const FreqBox& box);

void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

} // namespace torusct
