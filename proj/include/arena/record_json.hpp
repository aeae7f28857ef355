#pragma once

#include <string>

#include "arena/engine.hpp"

namespace arena::record_json {

// One JSON object on a single line, suitable for JSONL logs.  Every
// field of the record is preserved exactly; payloads are tagged by the
// alternative they hold, so undefined truths survive the trip.
std::string serialize_match(const MatchRecord& rec);

// Inverse of serialize_match.  Throws std::invalid_argument on text
// that is not a well-formed match record.
MatchRecord parse_match(const std::string& text);

}  // namespace arena::record_json
