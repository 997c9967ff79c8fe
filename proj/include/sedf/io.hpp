#pragma once

#include <string>

#include "json.hpp"
#include "sedf/family.hpp"

namespace sedf {

// {"group": "<spec>", "blocks": [["0","1"],["2","4"]]} using element labels
nlohmann::json family_to_json(const block_family& fam);
block_family family_from_json(const nlohmann::json& j);

// terse one-liner: "Z5: {0,1},{2,4}"
std::string family_to_text(const block_family& fam);
block_family family_from_text(const std::string& line);

// envelope for CLI results: command echo, version, wall time, payload
nlohmann::json make_run_report(const std::string& command, double wall_ms,
                               nlohmann::json payload);

} // namespace sedf
