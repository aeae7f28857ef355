#pragma once

#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::othello {

enum class Cell : uint8_t { Empty, Black, White };

inline Cell other_cell(Cell c) {
  return c == Cell::Black ? Cell::White
                          : (c == Cell::White ? Cell::Black : Cell::Empty);
}

// Coordinates are Coord{col, row}, both 0-based; rendered as (A-H, 1-8)
// with the column letter first.
struct State {
  std::array<Cell, 64> board{};
  Cell to_move = Cell::Black;
  int consecutive_passes = 0;

  Cell at(int col, int row) const { return board[row * 8 + col]; }
  Cell& at(int col, int row) { return board[row * 8 + col]; }
  static bool in_bounds(int col, int row) {
    return col >= 0 && col < 8 && row >= 0 && row < 8;
  }
};

State initial_state();

CoordSet legal_moves(const State& s);
bool is_legal(const State& s, Coord m);

// Places to_move's disc, flips every outflanked line, then hands the turn
// to the opponent — or keeps it when the opponent has no reply ("your
// turn is forfeited").  Both players stuck is recorded in
// consecutive_passes and makes the position terminal.
State apply(const State& s, Coord m);

// Places and flips only; to_move always switches.  The playable adapter
// builds on this so a forfeited turn can be observed and logged.
State place_and_flip(const State& s, Coord m);

Outcome outcome(const State& s);
int disc_count(const State& s, Cell c);

// Subproblem 1: does the side to move have a move onto a corner?
bool oracle_corner(const State& s);

// Subproblem 2: legal moves that create a wedge — empty edge squares in a
// maximal empty edge run of length 1, 3 or 5 bounded on both ends by
// opponent discs.  Follows the prompt's worked example: no stability
// analysis beyond edge membership.
CoordSet oracle_wedges(const State& s);

std::string render_board(const State& s);
std::string coord_text(Coord m);  // "(C,5)"
std::optional<Coord> parse_coord(const std::string& text);

class OthelloGame final : public Game {
 public:
  GameId id() const override { return GameId::Othello; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override;
  bool must_pass() const override;
  void apply_pass() override;
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const State& state() const { return st_; }

 private:
  State st_;
};

}  // namespace arena::othello
