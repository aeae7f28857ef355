#include "arena/games/surround.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace arena::surround {
namespace {

constexpr std::array<Direction, 4> kDirections = {
    Direction::Up, Direction::Down, Direction::Left, Direction::Right};

int seat_index(Seat s) { return s == Seat::First ? 0 : 1; }

std::string lower_trimmed(const std::string& text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = text.find_last_not_of(" \t\r\n");
  std::string out = text.substr(b, e - b + 1);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

State initial_state() {
  State s;
  for (int r = 0; r < kRows; ++r)
    for (int c = 0; c < kCols; ++c)
      if (r == 0 || r == kRows - 1 || c == 0 || c == kCols - 1)
        s.walls[cell_index(r, c)] = 1;
  s.head = {Coord{10, 10}, Coord{10, 29}};
  s.last = {Coord{10, 9}, Coord{10, 30}};
  s.walls[cell_index(10, 9)] = 1;
  s.walls[cell_index(10, 30)] = 1;
  s.trace[0] = {s.last[0], s.head[0]};
  s.trace[1] = {s.last[1], s.head[1]};
  return s;
}

Coord moved(Coord from, Direction d) {
  switch (d) {
    case Direction::Up: return Coord{from.a - 1, from.b};
    case Direction::Down: return Coord{from.a + 1, from.b};
    case Direction::Left: return Coord{from.a, from.b - 1};
    case Direction::Right: return Coord{from.a, from.b + 1};
  }
  return from;
}

void step(State& s, Direction first, Direction second) {
  if (s.outcome != Outcome::Ongoing)
    throw std::logic_error("step on a finished surround game");
  Coord from0 = s.head[0], from1 = s.head[1];
  Coord to0 = moved(from0, first), to1 = moved(from1, second);

  // Heads live strictly inside the border, so targets stay on the grid.
  auto blocked = [&](Coord to) {
    return s.walls[cell_index(to.a, to.b)] != 0 || to == from0 || to == from1;
  };
  bool crash0 = blocked(to0) || to0 == to1;
  bool crash1 = blocked(to1) || to0 == to1;

  if (crash0 || crash1) {
    s.outcome = crash0 && crash1 ? Outcome::Draw
                                 : (crash0 ? Outcome::SecondWins
                                           : Outcome::FirstWins);
    return;
  }
  s.walls[cell_index(from0.a, from0.b)] = 1;
  s.walls[cell_index(from1.a, from1.b)] = 1;
  s.last = {from0, from1};
  s.head = {to0, to1};
  s.trace[0].push_back(to0);
  s.trace[1].push_back(to1);
}

ValueGrid value_grid(const State& s, Seat viewer) {
  ValueGrid g{};
  for (int i = 0; i < kRows * kCols; ++i) g[i] = s.walls[i] ? kWall : kEmpty;
  int me = seat_index(viewer), opp = 1 - me;
  g[cell_index(s.last[me].a, s.last[me].b)] = kMyLast;
  g[cell_index(s.last[opp].a, s.last[opp].b)] = kOppLast;
  g[cell_index(s.head[me].a, s.head[me].b)] = kMyHead;
  g[cell_index(s.head[opp].a, s.head[opp].b)] = kOppHead;
  return g;
}

AdjacentValues oracle_adjacent(const State& s, Seat viewer) {
  ValueGrid g = value_grid(s, viewer);
  Coord head = s.head[seat_index(viewer)];
  AdjacentValues out{};
  for (size_t i = 0; i < kDirections.size(); ++i) {
    Coord to = moved(head, kDirections[i]);
    bool off = to.a < 0 || to.a >= kRows || to.b < 0 || to.b >= kCols;
    out[i] = off ? -1 : static_cast<int>(g[cell_index(to.a, to.b)]);
  }
  return out;
}

ActionSet oracle_valid_actions(const State& s, Seat viewer) {
  AdjacentValues adj = oracle_adjacent(s, viewer);
  ActionSet out;
  for (size_t i = 0; i < kDirections.size(); ++i)
    if (adj[i] == kEmpty) out.insert(kDirections[i]);
  return out;
}

SafetyMap oracle_safety(const State& s, Seat viewer) {
  ValueGrid g = value_grid(s, viewer);
  Coord head = s.head[seat_index(viewer)];
  SafetyMap out;
  for (Direction d : oracle_valid_actions(s, viewer)) {
    Coord start = moved(head, d);
    std::array<bool, kRows * kCols> seen{};
    std::vector<Coord> frontier = {start};
    seen[cell_index(start.a, start.b)] = true;
    int count = 0;
    while (!frontier.empty() && count < kSafeThreshold) {
      Coord cur = frontier.back();
      frontier.pop_back();
      count += 1;
      for (Direction nd : kDirections) {
        Coord nxt = moved(cur, nd);
        if (nxt.a < 0 || nxt.a >= kRows || nxt.b < 0 || nxt.b >= kCols)
          continue;
        int idx = cell_index(nxt.a, nxt.b);
        if (!seen[idx] && g[idx] == kEmpty) {
          seen[idx] = true;
          frontier.push_back(nxt);
        }
      }
    }
    out[d] = count >= kSafeThreshold;
  }
  return out;
}

std::string render(const State& s, Seat viewer) {
  ValueGrid g = value_grid(s, viewer);
  const std::vector<Coord>& trace = s.trace[seat_index(viewer)];
  std::ostringstream out;
  out << "Moving trace: [";
  for (size_t i = 0; i < trace.size(); ++i) {
    if (i) out << ", ";
    out << "(" << trace[i].a << ", " << trace[i].b << ")";
  }
  out << "]\n";
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      if (c) out << "  ";
      out << "(" << r << "," << c << "):" << static_cast<int>(g[cell_index(r, c)]);
    }
    out << "\n";
  }
  return out.str();
}

const char* direction_text(Direction d) {
  switch (d) {
    case Direction::Up: return "Move Up";
    case Direction::Down: return "Move Down";
    case Direction::Left: return "Move Left";
    case Direction::Right: return "Move Right";
  }
  return "Move Up";
}

std::optional<Direction> parse_direction(const std::string& text) {
  std::string t = lower_trimmed(text);
  if (t == "move up" || t == "up") return Direction::Up;
  if (t == "move down" || t == "down") return Direction::Down;
  if (t == "move left" || t == "left") return Direction::Left;
  if (t == "move right" || t == "right") return Direction::Right;
  return std::nullopt;
}

void SurroundGame::reset(RngStream&) { st_ = initial_state(); }

GameResult SurroundGame::result() const {
  GameResult r;
  switch (st_.outcome) {
    case Outcome::Ongoing: break;
    case Outcome::FirstWins:
      r.terminal = true;
      r.reward_first = 1.0;
      r.reward_second = -1.0;
      break;
    case Outcome::SecondWins:
      r.terminal = true;
      r.reward_first = -1.0;
      r.reward_second = 1.0;
      break;
    case Outcome::Draw:
      r.terminal = true;
      r.draw = true;
      break;
  }
  return r;
}

std::vector<std::string> SurroundGame::legal_actions(Seat) const {
  // Every direction is playable; stepping into a wall simply loses, and
  // the "valid actions" notion lives in the oracle truths instead.
  return {"Move Up", "Move Down", "Move Left", "Move Right"};
}

std::optional<std::string> SurroundGame::normalize_action(
    Seat, const std::string& action) const {
  auto d = parse_direction(action);
  if (!d) return std::nullopt;
  return std::string(direction_text(*d));
}

std::string SurroundGame::state_text(Seat viewer) const {
  return render(st_, viewer);
}

std::vector<Payload> SurroundGame::compute_truths(Seat viewer) const {
  std::vector<Payload> truths(3, Payload{});
  truths[0] = oracle_adjacent(st_, viewer);
  truths[1] = oracle_valid_actions(st_, viewer);
  truths[2] = oracle_safety(st_, viewer);
  return truths;
}

void SurroundGame::apply(Seat, const std::string&, RngStream&) {
  throw std::logic_error("surround resolves both actions at once");
}

void SurroundGame::apply_both(const std::string& first_action,
                              const std::string& second_action, RngStream&) {
  auto d0 = parse_direction(first_action);
  auto d1 = parse_direction(second_action);
  if (!d0 || !d1) throw std::invalid_argument("bad surround action");
  step(st_, *d0, *d1);
}

std::string SurroundGame::reply_for_action(const std::string& action) const {
  auto d = parse_direction(action);
  return d ? direction_text(*d) : action;
}

}  // namespace arena::surround
