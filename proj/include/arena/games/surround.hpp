#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::surround {

constexpr int kRows = 20;
constexpr int kCols = 40;

// Grid cell values as the prompt legend defines them (viewer-relative).
constexpr int kEmpty = 0;
constexpr int kWall = 1;
constexpr int kMyLast = 2;
constexpr int kMyHead = 3;
constexpr int kOppLast = 4;
constexpr int kOppHead = 5;

constexpr int kSafeThreshold = 10;

struct State {
  // Border plus every trail cell (including the two "last" cells, which
  // only render differently); heads are never walls.
  std::array<uint8_t, kRows * kCols> walls{};
  std::array<Coord, 2> head;
  std::array<Coord, 2> last;
  std::array<std::vector<Coord>, 2> trace;
  Outcome outcome = Outcome::Ongoing;
};

State initial_state();

inline int cell_index(int r, int c) { return r * kCols + c; }
Coord moved(Coord from, Direction d);

// Both heads advance at once; vacated cells harden into trail before any
// collision test, so swaps and chases resolve symmetrically.
void step(State& s, Direction first, Direction second);

using ValueGrid = std::array<uint8_t, kRows * kCols>;
ValueGrid value_grid(const State& s, Seat viewer);

AdjacentValues oracle_adjacent(const State& s, Seat viewer);
ActionSet oracle_valid_actions(const State& s, Seat viewer);
// Safe iff the 4-connected empty region containing the landing cell
// (counted inclusive) has at least kSafeThreshold cells.
SafetyMap oracle_safety(const State& s, Seat viewer);

std::string render(const State& s, Seat viewer);

const char* direction_text(Direction d);
std::optional<Direction> parse_direction(const std::string& text);

class SurroundGame final : public Game {
 public:
  GameId id() const override { return GameId::Surround; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override { return Seat::First; }
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::optional<std::string> normalize_action(
      Seat seat, const std::string& action) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  void apply_both(const std::string& first_action,
                  const std::string& second_action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const State& state() const { return st_; }
  void set_state(State s) { st_ = std::move(s); }

 private:
  State st_;
};

}  // namespace arena::surround
