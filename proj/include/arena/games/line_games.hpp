#pragma once

#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::grid {

enum class Mark : uint8_t { Empty, X, O };

inline Mark other_mark(Mark m) {
  return m == Mark::X ? Mark::O : (m == Mark::O ? Mark::X : Mark::Empty);
}

// Shared board for TicTacToe (3x3, no gravity, 3 in a row) and Connect4
// (6x7, gravity, 4 in a row).  Coordinates are (row, col), zero-based;
// with gravity, row 0 is the lowest row.
struct GridState {
  int rows = 3;
  int cols = 3;
  int win_length = 3;
  bool gravity = false;
  std::vector<Mark> cells;
  Mark to_move = Mark::X;

  Mark at(int r, int c) const { return cells[r * cols + c]; }
  Mark& at(int r, int c) { return cells[r * cols + c]; }
  bool in_bounds(int r, int c) const {
    return r >= 0 && r < rows && c >= 0 && c < cols;
  }
};

GridState tictactoe_initial();
GridState connect4_initial();

CoordSet legal_moves(const GridState& s);
bool is_legal(const GridState& s, Coord m);

// Places to_move's mark; the caller must pass a legal move.
GridState apply(const GridState& s, Coord m);

Outcome outcome(const GridState& s);

enum class ForWhom { Mover, Opponent };

// Squares among the current legal moves where placing `for_whom`'s mark
// completes a line of win_length.  Both sides are evaluated over the same
// candidate squares (the squares currently markable/droppable).
CoordSet winning_moves(const GridState& s, ForWhom who);

std::string render(const GridState& s);

class TicTacToeGame final : public Game {
 public:
  GameId id() const override { return GameId::TicTacToe; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override;
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const GridState& state() const { return st_; }

 protected:
  GridState st_;
};

class Connect4Game final : public Game {
 public:
  GameId id() const override { return GameId::Connect4; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override;
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const GridState& state() const { return st_; }

 protected:
  GridState st_;
};

// Shared helpers for the coordinate action format "(r,c)".
std::string coord_action(Coord m);
std::optional<Coord> parse_coord_action(const std::string& text);

}  // namespace arena::grid
