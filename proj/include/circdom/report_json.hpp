#pragma once

// JSON form of DominationReport. Field names and order are part of the CLI
// contract; tests pin them against a golden file.

#include <json.hpp>

#include "circdom/report.hpp"

namespace circdom {

using Json = nlohmann::ordered_json;

/// With include_timing = false the wall_ms field is written as 0 so output is
/// byte-reproducible.
Json to_json(const DominationReport& report, bool include_timing = true);

}  // namespace circdom
