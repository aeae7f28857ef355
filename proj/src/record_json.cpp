#include <stdexcept>

#include "arena/record_json.hpp"
#include "json.hpp"

namespace arena::record_json {

namespace {

using nlohmann::json;

template <typename Enum, typename Range>
Enum enum_from(const Range& all, const std::string& name, const char* what) {
  for (Enum v : all)
    if (name == to_string(v)) return v;
  throw std::invalid_argument(std::string(what) + ": " + name);
}

constexpr std::array<Seat, 2> kSeats = {Seat::First, Seat::Second};
constexpr std::array<BallDirection, 4> kBallDirs = {
    BallDirection::LeftDown, BallDirection::RightUp, BallDirection::LeftUp,
    BallDirection::RightDown};

json coord_json(Coord c) { return json::array({c.a, c.b}); }

Coord coord_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("coord must be a two-element array");
  return {j[0].get<int>(), j[1].get<int>()};
}

json payload_json(const Payload& p) {
  json out;
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out["kind"] = "none";
        } else if constexpr (std::is_same_v<T, bool>) {
          out["kind"] = "bool";
          out["value"] = v;
        } else if constexpr (std::is_same_v<T, int64_t>) {
          out["kind"] = "int";
          out["value"] = v;
        } else if constexpr (std::is_same_v<T, Percent>) {
          out["kind"] = "percent";
          out["tenths"] = v.tenths;
        } else if constexpr (std::is_same_v<T, BallDirection>) {
          out["kind"] = "ball_dir";
          out["value"] = to_string(v);
        } else if constexpr (std::is_same_v<T, CoordSet>) {
          out["kind"] = "coord_set";
          json coords = json::array();
          for (Coord c : v) coords.push_back(coord_json(c));
          out["coords"] = std::move(coords);
        } else if constexpr (std::is_same_v<T, PathSet>) {
          out["kind"] = "path_set";
          json paths = json::array();
          for (const MovePath& path : v) {
            json steps = json::array();
            for (Coord c : path) steps.push_back(coord_json(c));
            paths.push_back(std::move(steps));
          }
          out["paths"] = std::move(paths);
        } else if constexpr (std::is_same_v<T, AdjacentValues>) {
          out["kind"] = "adjacent";
          out["values"] = json::array({v[0], v[1], v[2], v[3]});
        } else if constexpr (std::is_same_v<T, ActionSet>) {
          out["kind"] = "actions";
          json dirs = json::array();
          for (Direction d : v) dirs.push_back(to_string(d));
          out["dirs"] = std::move(dirs);
        } else if constexpr (std::is_same_v<T, SafetyMap>) {
          out["kind"] = "safety";
          json entries = json::array();
          for (const auto& [d, safe] : v)
            entries.push_back(json::array({to_string(d), safe}));
          out["entries"] = std::move(entries);
        }
      },
      p);
  return out;
}

Payload payload_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "none") return std::monostate{};
  if (kind == "bool") return j.at("value").get<bool>();
  if (kind == "int") return j.at("value").get<int64_t>();
  if (kind == "percent") return Percent{j.at("tenths").get<int>()};
  if (kind == "ball_dir")
    return enum_from<BallDirection>(kBallDirs, j.at("value").get<std::string>(),
                                    "unknown ball direction");
  if (kind == "coord_set") {
    CoordSet set;
    for (const json& c : j.at("coords")) set.insert(coord_from(c));
    return set;
  }
  if (kind == "path_set") {
    PathSet set;
    for (const json& steps : j.at("paths")) {
      MovePath path;
      for (const json& c : steps) path.push_back(coord_from(c));
      set.insert(std::move(path));
    }
    return set;
  }
  if (kind == "adjacent") {
    const json& values = j.at("values");
    if (!values.is_array() || values.size() != 4)
      throw std::invalid_argument("adjacent payload needs four values");
    AdjacentValues v{};
    for (int i = 0; i < 4; ++i) v[static_cast<size_t>(i)] = values[i].get<int>();
    return v;
  }
  if (kind == "actions") {
    ActionSet set;
    for (const json& d : j.at("dirs"))
      set.insert(enum_from<Direction>(kAllDirections, d.get<std::string>(),
                                      "unknown direction"));
    return set;
  }
  if (kind == "safety") {
    SafetyMap map;
    for (const json& entry : j.at("entries")) {
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("safety entry must be [direction, bool]");
      map[enum_from<Direction>(kAllDirections, entry[0].get<std::string>(),
                               "unknown direction")] = entry[1].get<bool>();
    }
    return map;
  }
  throw std::invalid_argument("unknown payload kind: " + kind);
}

json span_json(const protocol::Span& s) { return json::array({s.begin, s.end}); }

protocol::Span span_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("span must be a two-element array");
  return {j[0].get<size_t>(), j[1].get<size_t>()};
}

json turn_json(const TurnRecord& tr) {
  json parsed;
  parsed["action"] = {{"ok", tr.parsed.action.ok},
                      {"text", tr.parsed.action.text},
                      {"span", span_json(tr.parsed.action.span)}};
  json markers = json::array();
  for (const protocol::Extraction& e : tr.parsed.intermediates)
    markers.push_back({{"ok", e.ok},
                       {"payload", payload_json(e.payload)},
                       {"span", span_json(e.span)}});
  parsed["intermediates"] = std::move(markers);

  json truths = json::array();
  for (const Payload& p : tr.truths) truths.push_back(payload_json(p));

  return {{"turn_index", tr.turn_index},
          {"seat", to_string(tr.seat)},
          {"state_text", tr.state_text},
          {"prompt_text", tr.prompt_text},
          {"raw_reply", tr.raw_reply},
          {"parsed", std::move(parsed)},
          {"truths", std::move(truths)},
          {"action_taken", tr.action_taken},
          {"action_was_fallback", tr.action_was_fallback}};
}

TurnRecord turn_from(const json& j) {
  TurnRecord tr;
  tr.turn_index = j.at("turn_index").get<int>();
  tr.seat = enum_from<Seat>(kSeats, j.at("seat").get<std::string>(),
                            "unknown seat");
  tr.state_text = j.at("state_text").get<std::string>();
  tr.prompt_text = j.at("prompt_text").get<std::string>();
  tr.raw_reply = j.at("raw_reply").get<std::string>();
  const json& parsed = j.at("parsed");
  const json& action = parsed.at("action");
  tr.parsed.action.ok = action.at("ok").get<bool>();
  tr.parsed.action.text = action.at("text").get<std::string>();
  tr.parsed.action.span = span_from(action.at("span"));
  for (const json& e : parsed.at("intermediates")) {
    protocol::Extraction ex;
    ex.ok = e.at("ok").get<bool>();
    ex.payload = payload_from(e.at("payload"));
    ex.span = span_from(e.at("span"));
    tr.parsed.intermediates.push_back(std::move(ex));
  }
  for (const json& p : j.at("truths")) tr.truths.push_back(payload_from(p));
  tr.action_taken = j.at("action_taken").get<std::string>();
  tr.action_was_fallback = j.at("action_was_fallback").get<bool>();
  return tr;
}

json config_json(const MatchConfig& cfg) {
  return {{"game_id", to_string(cfg.game_id)},
          {"seed", cfg.seed},
          {"max_turns", cfg.max_turns},
          {"prompt_variant", protocol::to_string(cfg.prompt_variant)},
          {"parse_retries", cfg.parse_retries},
          {"invalid_action_policy", to_string(cfg.invalid_action_policy)},
          {"strict_markers", cfg.strict_markers}};
}

MatchConfig config_from(const json& j) {
  MatchConfig cfg;
  auto game = game_id_from_string(j.at("game_id").get<std::string>());
  if (!game) throw std::invalid_argument("unknown game id");
  cfg.game_id = *game;
  cfg.seed = j.at("seed").get<uint64_t>();
  cfg.max_turns = j.at("max_turns").get<int>();
  auto variant = protocol::prompt_variant_from_string(
      j.at("prompt_variant").get<std::string>());
  if (!variant) throw std::invalid_argument("unknown prompt variant");
  cfg.prompt_variant = *variant;
  cfg.parse_retries = j.at("parse_retries").get<int>();
  auto policy = invalid_action_policy_from_string(
      j.at("invalid_action_policy").get<std::string>());
  if (!policy) throw std::invalid_argument("unknown invalid-action policy");
  cfg.invalid_action_policy = *policy;
  cfg.strict_markers = j.value("strict_markers", false);
  return cfg;
}

}  // namespace

std::string serialize_match(const MatchRecord& rec) {
  json turns = json::array();
  for (const TurnRecord& tr : rec.turns) turns.push_back(turn_json(tr));
  json out = {{"config", config_json(rec.config)},
              {"agent_ids", json::array({rec.agent_ids[0], rec.agent_ids[1]})},
              {"turns", std::move(turns)},
              {"reward_first", rec.reward_first},
              {"reward_second", rec.reward_second},
              {"reward_cap", rec.reward_cap},
              {"termination_reason", to_string(rec.termination_reason)}};
  return out.dump();
}

MatchRecord parse_match(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::invalid_argument("record is not a JSON object");
  try {
    MatchRecord rec;
    rec.config = config_from(j.at("config"));
    const json& ids = j.at("agent_ids");
    if (!ids.is_array() || ids.size() != 2)
      throw std::invalid_argument("agent_ids must hold two names");
    rec.agent_ids = {ids[0].get<std::string>(), ids[1].get<std::string>()};
    for (const json& t : j.at("turns")) rec.turns.push_back(turn_from(t));
    rec.reward_first = j.at("reward_first").get<double>();
    rec.reward_second = j.at("reward_second").get<double>();
    rec.reward_cap = j.at("reward_cap").get<double>();
    auto reason = termination_reason_from_string(
        j.at("termination_reason").get<std::string>());
    if (!reason) throw std::invalid_argument("unknown termination reason");
    rec.termination_reason = *reason;
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed match record: ") +
                                e.what());
  }
}

}  // namespace arena::record_json
