#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <stdexcept>

#include "arena/games/negotiation.hpp"
#include "arena/games/othello.hpp"
#include "arena/games/surround.hpp"
#include "arena/protocol.hpp"

namespace arena::protocol {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string percent_text(Percent p) {
  int t = p.tenths;
  std::string out;
  if (t < 0) {
    out += '-';
    t = -t;
  }
  out += std::to_string(t / 10);
  out += '.';
  out += static_cast<char>('0' + t % 10);
  return out;
}

std::string grid_coord_text(Coord c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

std::string path_text(const MovePath& path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += "->";
    out += grid_coord_text(path[i]);
  }
  return out;
}

template <class Range, class Fn>
std::string join(const Range& items, Fn text_of) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += text_of(item);
  }
  return out;
}

// --- lenient payload parsers ---------------------------------------------

std::optional<Payload> parse_bool(const std::string& t) {
  if (t == "true" || t == "yes" || t == "safe") return Payload{true};
  if (t == "false" || t == "no" || t == "unsafe") return Payload{false};
  return std::nullopt;
}

std::optional<Payload> parse_int(const std::string& t) {
  static const std::regex re(R"([+-]?\d+)");
  if (!std::regex_match(t, re)) return std::nullopt;
  try {
    return Payload{static_cast<int64_t>(std::stoll(t))};
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

std::optional<Payload> parse_percent(std::string t) {
  t = trim(t);
  if (!t.empty() && t.back() == '%') t = trim(t.substr(0, t.size() - 1));
  static const std::regex re(R"([+-]?\d+(\.\d+)?)");
  if (!std::regex_match(t, re)) return std::nullopt;
  double v = std::stod(t);
  double tenths = std::llround(v * 10.0);
  if (tenths < -1000000 || tenths > 1000000) return std::nullopt;
  return Payload{Percent{static_cast<int>(tenths)}};
}

std::optional<Payload> parse_ball_dir(const std::string& raw) {
  // Collapse everything non-alphabetic so "Right-Up" and "right  up" pass.
  std::string words;
  for (char c : raw) {
    if (std::isalpha(static_cast<unsigned char>(c)))
      words += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!words.empty() && words.back() != ' ')
      words += ' ';
  }
  words = trim(words);
  if (words == "left down") return Payload{BallDirection::LeftDown};
  if (words == "right up") return Payload{BallDirection::RightUp};
  if (words == "left up") return Payload{BallDirection::LeftUp};
  if (words == "right down") return Payload{BallDirection::RightDown};
  return std::nullopt;
}

std::optional<Payload> parse_coord_set(const std::string& t, bool othello_style) {
  CoordSet set;
  if (othello_style) {
    static const std::regex re(R"(\(\s*([A-Ha-h])\s*,\s*([1-8])\s*\))");
    auto end = std::sregex_iterator();
    for (auto it = std::sregex_iterator(t.begin(), t.end(), re); it != end; ++it) {
      int col = std::toupper(static_cast<unsigned char>((*it)[1].str()[0])) - 'A';
      int row = (*it)[2].str()[0] - '1';
      set.insert(Coord{col, row});
    }
  } else {
    static const std::regex re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    auto end = std::sregex_iterator();
    for (auto it = std::sregex_iterator(t.begin(), t.end(), re); it != end; ++it)
      set.insert(Coord{std::stoi((*it)[1].str()), std::stoi((*it)[2].str())});
  }
  if (set.empty()) return std::nullopt;
  return Payload{std::move(set)};
}

std::optional<Payload> parse_path_set(const std::string& t) {
  static const std::regex path_re(
      R"(\(\s*\d+\s*,\s*\d+\s*\)(?:\s*-+>\s*\(\s*\d+\s*,\s*\d+\s*\))+)");
  static const std::regex coord_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  PathSet set;
  auto end = std::sregex_iterator();
  for (auto it = std::sregex_iterator(t.begin(), t.end(), path_re); it != end; ++it) {
    std::string chunk = it->str();
    MovePath path;
    for (auto ct = std::sregex_iterator(chunk.begin(), chunk.end(), coord_re);
         ct != end; ++ct)
      path.push_back(Coord{std::stoi((*ct)[1].str()), std::stoi((*ct)[2].str())});
    set.insert(std::move(path));
  }
  if (set.empty()) return std::nullopt;
  return Payload{std::move(set)};
}

std::optional<Payload> parse_adjacent(const std::string& t) {
  static const std::array<std::regex, 4> res = {
      std::regex(R"(\bup\b\s*:?\s*(-?\d+))", std::regex::icase),
      std::regex(R"(\bdown\b\s*:?\s*(-?\d+))", std::regex::icase),
      std::regex(R"(\bleft\b\s*:?\s*(-?\d+))", std::regex::icase),
      std::regex(R"(\bright\b\s*:?\s*(-?\d+))", std::regex::icase)};
  AdjacentValues values{};
  for (int d = 0; d < 4; ++d) {
    std::smatch m;
    if (!std::regex_search(t, m, res[d])) return std::nullopt;
    values[d] = std::stoi(m[1].str());
  }
  return Payload{values};
}

std::optional<Payload> parse_actions(const std::string& t) {
  static const std::regex re(R"(\b(up|down|left|right)\b)", std::regex::icase);
  ActionSet set;
  auto end = std::sregex_iterator();
  for (auto it = std::sregex_iterator(t.begin(), t.end(), re); it != end; ++it) {
    std::string w = lower((*it)[1].str());
    if (w == "up") set.insert(Direction::Up);
    else if (w == "down") set.insert(Direction::Down);
    else if (w == "left") set.insert(Direction::Left);
    else set.insert(Direction::Right);
  }
  if (set.empty()) return std::nullopt;
  return Payload{std::move(set)};
}

std::optional<Payload> parse_safety(const std::string& t) {
  static const std::regex re(
      R"(\b(up|down|left|right)\b[\s:,-]*(?:is\s+)?(unsafe|safe)\b)",
      std::regex::icase);
  SafetyMap map;
  auto end = std::sregex_iterator();
  for (auto it = std::sregex_iterator(t.begin(), t.end(), re); it != end; ++it) {
    std::string w = lower((*it)[1].str());
    Direction d = w == "up"     ? Direction::Up
                  : w == "down" ? Direction::Down
                  : w == "left" ? Direction::Left
                                : Direction::Right;
    map[d] = lower((*it)[2].str()) == "safe";
  }
  if (map.empty()) return std::nullopt;
  return Payload{std::move(map)};
}

std::optional<Payload> parse_lenient(const std::string& text, PayloadKind kind) {
  std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  if (lower(t) == "none") {
    // Sets distinguish "explicitly nothing" from "no answer"; scalars don't.
    switch (kind) {
      case PayloadKind::CoordSet:
      case PayloadKind::OthelloCoordSet: return Payload{CoordSet{}};
      case PayloadKind::PathSet: return Payload{PathSet{}};
      case PayloadKind::Actions: return Payload{ActionSet{}};
      case PayloadKind::Safety: return Payload{SafetyMap{}};
      default: return Payload{};
    }
  }
  switch (kind) {
    case PayloadKind::Bool: return parse_bool(lower(t));
    case PayloadKind::Int: return parse_int(t);
    case PayloadKind::Percent: return parse_percent(t);
    case PayloadKind::BallDir: return parse_ball_dir(t);
    case PayloadKind::CoordSet: return parse_coord_set(t, false);
    case PayloadKind::OthelloCoordSet: return parse_coord_set(t, true);
    case PayloadKind::PathSet: return parse_path_set(t);
    case PayloadKind::Adjacent: return parse_adjacent(t);
    case PayloadKind::Actions: return parse_actions(t);
    case PayloadKind::Safety: return parse_safety(t);
  }
  return std::nullopt;
}

// --- action extraction helpers --------------------------------------------

struct RawMatch {
  std::smatch m;
  bool found = false;
};

// Last regex match in `text`; the agent's final statement is authoritative.
RawMatch last_match(const std::string& text, const std::regex& re) {
  RawMatch out;
  auto end = std::sregex_iterator();
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != end; ++it) {
    out.m = *it;
    out.found = true;
  }
  return out;
}

Span span_of(const std::smatch& m, int group = 0) {
  return Span{static_cast<size_t>(m.position(group)),
              static_cast<size_t>(m.position(group) + m.length(group))};
}

ActionExtraction ok_action(std::string text, Span span) {
  return ActionExtraction{true, std::move(text), span};
}

ActionExtraction extract_grid_move(const std::string& text, bool othello_style) {
  static const std::regex full_digits(
      R"(chosen\s*move\s*:?\s*\(\s*(\d)\s*,\s*(\d)\s*\))", std::regex::icase);
  static const std::regex bare_digits(R"(\(\s*(\d)\s*,\s*(\d)\s*\))");
  static const std::regex full_letters(
      R"(chosen\s*move\s*:?\s*\(\s*([a-h])\s*,\s*([1-8])\s*\))", std::regex::icase);
  static const std::regex bare_letters(R"(\(\s*([A-Ha-h])\s*,\s*([1-8])\s*\))");
  const std::regex& full = othello_style ? full_letters : full_digits;
  const std::regex& bare = othello_style ? bare_letters : bare_digits;
  RawMatch m = last_match(text, full);
  if (!m.found) m = last_match(text, bare);
  if (!m.found) return {};
  std::string a = m.m[1].str(), b = m.m[2].str();
  if (othello_style)
    a[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(a[0])));
  return ok_action("(" + a + "," + b + ")", span_of(m.m));
}

ActionExtraction extract_checkers_move(const std::string& text) {
  static const std::regex full(
      R"(chosen\s*move\s*:?\s*\(\s*\d\s*,\s*\d\s*\)(?:\s*-+>\s*\(\s*\d\s*,\s*\d\s*\))+)",
      std::regex::icase);
  static const std::regex bare(
      R"(\(\s*\d\s*,\s*\d\s*\)(?:\s*-+>\s*\(\s*\d\s*,\s*\d\s*\))+)");
  static const std::regex coord(R"(\(\s*(\d)\s*,\s*(\d)\s*\))");
  RawMatch m = last_match(text, full);
  if (!m.found) m = last_match(text, bare);
  if (!m.found) return {};
  std::string chunk = m.m.str();
  std::string canon;
  auto end = std::sregex_iterator();
  for (auto it = std::sregex_iterator(chunk.begin(), chunk.end(), coord); it != end; ++it) {
    if (!canon.empty()) canon += "->";
    canon += "(" + (*it)[1].str() + "," + (*it)[2].str() + ")";
  }
  return ok_action(std::move(canon), span_of(m.m));
}

ActionExtraction extract_pong_action(const std::string& text) {
  auto canon_of = [](const std::string& name) -> std::string {
    std::string w = lower(name);
    if (w.find("still") != std::string::npos) return "0 - Stay Still";
    if (w.find("up") != std::string::npos) return "1 - Move Up";
    return "2 - Move Down";
  };
  static const std::regex numbered(
      R"(([0-2])\s*-\s*(stay\s*still|move\s*up|move\s*down))", std::regex::icase);
  static const std::regex named(R"(\b(stay\s*still|move\s*up|move\s*down)\b)",
                                std::regex::icase);
  static const std::regex lone_digit(R"((?:^|[^0-9])([0-2])(?![0-9]))");
  RawMatch m = last_match(text, numbered);
  if (m.found) return ok_action(canon_of(m.m[2].str()), span_of(m.m));
  m = last_match(text, named);
  if (m.found) return ok_action(canon_of(m.m[1].str()), span_of(m.m));
  m = last_match(text, lone_digit);
  if (m.found) {
    static const char* names[] = {"0 - Stay Still", "1 - Move Up", "2 - Move Down"};
    return ok_action(names[m.m[1].str()[0] - '0'], span_of(m.m, 1));
  }
  return {};
}

ActionExtraction extract_surround_action(const std::string& text) {
  static const std::regex full(R"(move\s+(up|down|left|right)\b)", std::regex::icase);
  static const std::regex bare(R"(\b(up|down|left|right)\b)", std::regex::icase);
  RawMatch m = last_match(text, full);
  if (!m.found) m = last_match(text, bare);
  if (!m.found) return {};
  std::string w = lower(m.m[1].str());
  Direction d = w == "up"     ? Direction::Up
                : w == "down" ? Direction::Down
                : w == "left" ? Direction::Left
                              : Direction::Right;
  return ok_action(surround::direction_text(d), span_of(m.m));
}

ActionExtraction extract_holdem_action(const std::string& text) {
  static const std::regex re(
      R"(\b(fold|check\s*and\s*call|raise\s*half\s*pot|raise\s*full\s*pot|all\s*-?\s*in)\b)",
      std::regex::icase);
  RawMatch m = last_match(text, re);
  if (!m.found) return {};
  std::string w = lower(m.m[1].str());
  std::string canon;
  if (w.find("fold") != std::string::npos) canon = "Fold";
  else if (w.find("check") != std::string::npos) canon = "Check and Call";
  else if (w.find("half") != std::string::npos) canon = "Raise Half Pot";
  else if (w.find("full") != std::string::npos) canon = "Raise Full Pot";
  else canon = "All in";
  return ok_action(std::move(canon), span_of(m.m));
}

ActionExtraction extract_negotiation_action(const std::string& text) {
  static const std::regex line(R"(proposal\s*:[^\n]*)", std::regex::icase);
  static const std::regex agree(R"(\bagree\b)", std::regex::icase);
  RawMatch m = last_match(text, line);
  if (m.found) {
    Span span = span_of(m.m);
    auto reply = negotiation::parse_reply(m.m.str());
    if (!reply) return ActionExtraction{false, "", span};
    return ok_action(negotiation::reply_text(*reply), span);
  }
  m = last_match(text, agree);
  if (m.found) return ok_action("Proposal: [Agree]", span_of(m.m));
  return {};
}

}  // namespace

std::string format_payload(const Payload& p, PayloadKind kind) {
  if (!is_defined(p)) return "None";
  switch (kind) {
    case PayloadKind::Bool:
      return std::get<bool>(p) ? "True" : "False";
    case PayloadKind::Int:
      return std::to_string(std::get<int64_t>(p));
    case PayloadKind::Percent:
      return percent_text(std::get<Percent>(p));
    case PayloadKind::BallDir:
      return to_string(std::get<BallDirection>(p));
    case PayloadKind::CoordSet: {
      const auto& s = std::get<CoordSet>(p);
      return s.empty() ? "None" : join(s, grid_coord_text);
    }
    case PayloadKind::OthelloCoordSet: {
      const auto& s = std::get<CoordSet>(p);
      return s.empty() ? "None" : join(s, othello::coord_text);
    }
    case PayloadKind::PathSet: {
      const auto& s = std::get<PathSet>(p);
      return s.empty() ? "None" : join(s, path_text);
    }
    case PayloadKind::Adjacent: {
      const auto& v = std::get<AdjacentValues>(p);
      std::string out;
      for (int d = 0; d < 4; ++d) {
        if (d) out += ", ";
        out += to_string(static_cast<Direction>(d));
        out += ' ';
        out += std::to_string(v[d]);
      }
      return out;
    }
    case PayloadKind::Actions: {
      const auto& s = std::get<ActionSet>(p);
      return s.empty() ? "None"
                       : join(s, [](Direction d) {
                           return std::string(surround::direction_text(d));
                         });
    }
    case PayloadKind::Safety: {
      const auto& m = std::get<SafetyMap>(p);
      return m.empty() ? "None" : join(m, [](const auto& kv) {
        return std::string(surround::direction_text(kv.first)) +
               (kv.second ? " Safe" : " Unsafe");
      });
    }
  }
  throw std::logic_error("unknown payload kind");
}

std::optional<Payload> parse_payload(const std::string& text, PayloadKind kind,
                                     bool strict) {
  std::optional<Payload> parsed = parse_lenient(text, kind);
  if (!parsed) return std::nullopt;
  if (strict && text != format_payload(*parsed, kind)) return std::nullopt;
  return parsed;
}

std::vector<Extraction> extract_intermediates(const std::string& text,
                                              GameId id, bool strict) {
  const GameMeta& meta = game_meta(id);
  int n = meta.subproblem_count();
  std::vector<Extraction> out(static_cast<size_t>(n));
  static const std::regex marker(
      R"(\[\s*intermediate\s+thinking\s+results?\s*(\d+)\s*:\s*([^\]]*)\])",
      std::regex::icase);
  std::vector<std::optional<std::pair<std::string, Span>>> found(
      static_cast<size_t>(n));
  auto end = std::sregex_iterator();
  for (auto it = std::sregex_iterator(text.begin(), text.end(), marker);
       it != end; ++it) {
    const std::string digits = (*it)[1].str();
    if (digits.size() > 2) continue;
    int idx = std::stoi(digits);
    if (idx < 1 || idx > n) continue;
    found[static_cast<size_t>(idx - 1)] = {(*it)[2].str(), span_of(*it)};
  }
  for (int i = 0; i < n; ++i) {
    auto& slot = found[static_cast<size_t>(i)];
    if (!slot) continue;  // no marker: ok stays false, span stays zero
    out[static_cast<size_t>(i)].span = slot->second;
    if (auto p = parse_payload(trim(slot->first), meta.subproblems[static_cast<size_t>(i)].kind,
                               strict)) {
      out[static_cast<size_t>(i)].ok = true;
      out[static_cast<size_t>(i)].payload = std::move(*p);
    }
  }
  return out;
}

ActionExtraction extract_action(const std::string& text, GameId id) {
  switch (id) {
    case GameId::Othello: return extract_grid_move(text, true);
    case GameId::Pong: return extract_pong_action(text);
    case GameId::Surround: return extract_surround_action(text);
    case GameId::Checkers: return extract_checkers_move(text);
    case GameId::TicTacToe: return extract_grid_move(text, false);
    case GameId::Connect4: return extract_grid_move(text, false);
    case GameId::Holdem: return extract_holdem_action(text);
    case GameId::Negotiation: return extract_negotiation_action(text);
  }
  return {};
}

}  // namespace arena::protocol
