#pragma once

#include <json.hpp>

namespace dcr::json {

// Insertion-ordered so serialized reports keep a fixed field order.
using ordered = nlohmann::ordered_json;

}  // namespace dcr::json
