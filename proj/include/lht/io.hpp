#pragma once

#include <json.hpp>
#include <string>

#include "lht/arctic.hpp"
#include "lht/lattice.hpp"
#include "lht/tableau.hpp"

namespace lht {

using Json = nlohmann::ordered_json;

// {"n", "t", "lambda", "rows"}
Json tableau_to_json(const LectureHallTableau& T);
LectureHallTableau tableau_from_json(const Json& doc);

// {"n", "t", "paths": [[[col, num], ...], ...]}, paths in start order, vertices top to bottom.
Json paths_to_json(const PathSystem& ps);
PathSystem paths_from_json(const Json& doc);

// Dual paths add "m"; vertices bottom to top.
Json dual_paths_to_json(const DualPathSystem& dps);
DualPathSystem dual_paths_from_json(const Json& doc);

// {"n", "t", "lambda", "matching": [edge ids ascending]}
Json dimers_to_json(const DimerConfiguration& d);
DimerConfiguration dimers_from_json(const Json& doc);

// A built-in name, a JSON array of segments, or a JSON object {"segments": [...]};
// each segment is {"u_start", "u_end", "slope", "intercept"}.
Profile parse_profile(const std::string& text);
Json profile_to_json(const Profile& p);

}  // namespace lht
