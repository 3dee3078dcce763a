#pragma once

#include <string>

#include <json.hpp>

#include "eqtower/extraction.hpp"
#include "eqtower/hstructure.hpp"
#include "eqtower/lattice.hpp"

namespace eqtower {

using Json = nlohmann::ordered_json;

// {"n": int, "class_of": [int...]} — canonical representative form required.
Json eqrel_to_json(const EqRel& e);
EqRel eqrel_from_json(const Json& j);

// {"h": int, "n": int, "labels"?: [string...], "levels": [[int...]...]}
Json hstructure_to_json(const HStructure& s);
HStructure hstructure_from_json(const Json& j);

// {"n": int, "values": [int...]}
Json coloring_to_json(const Coloring& f);
Coloring coloring_from_json(const Json& j);

// {"n": int, "leq": [[bool...]...]}
Json lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const Json& j);

// {"lattice": {...}, "ground": int, "alpha": [[int...]...]}
Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace eqtower
