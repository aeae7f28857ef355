#pragma once

#include <map>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::checkers {

enum class Cell : uint8_t { Empty, BlackMan, BlackKing, WhiteMan, WhiteKing };

inline bool is_black(Cell c) {
  return c == Cell::BlackMan || c == Cell::BlackKing;
}
inline bool is_white(Cell c) {
  return c == Cell::WhiteMan || c == Cell::WhiteKing;
}
inline bool is_king(Cell c) {
  return c == Cell::BlackKing || c == Cell::WhiteKing;
}

// One move: the visited squares (start, landing1, ..., landingN) plus the
// squares of every piece captured along the way.
struct Move {
  MovePath path;
  std::vector<Coord> captured;

  bool is_capture() const { return !captured.empty(); }
  auto operator<=>(const Move&) const = default;
};

// Coordinates are (row, col), zero-based.  Dark (playable) squares have
// row+col odd.  Black men start on rows 5-7 and advance toward row 0;
// White advances toward row 7.
struct State {
  std::array<Cell, 64> board{};
  bool black_to_move = true;
  int halfmove_no_capture = 0;
  std::map<std::string, int> position_history;

  Cell at(int r, int c) const { return board[r * 8 + c]; }
  Cell& at(int r, int c) { return board[r * 8 + c]; }
  static bool in_bounds(int r, int c) {
    return r >= 0 && r < 8 && c >= 0 && c < 8;
  }
  std::string position_key() const;
};

State initial_state();

// Forced-capture rule: when any jump exists only jumps are returned, each
// continued while a further jump is available from its landing square.
std::vector<Move> legal_moves(const State& s);

State apply(const State& s, const Move& m);

Outcome outcome(const State& s);

// Subproblem 1: legal moves that promote one of the mover's pieces.
std::vector<Move> oracle_new_king(const State& s);

// Subproblem 2: legal moves m after which the opponent can capture the
// piece m just moved and, for at least one such reply, the mover has no
// capture that takes the capturing piece back.
std::vector<Move> oracle_worthless_die(const State& s);

// Subproblem 3 (logged, unscored): moves m whose every opponent reply is
// a single-piece capture of the moved piece and where at least one such
// forced reply opens a mover capture chain taking two or more pieces.
std::vector<Move> oracle_two_for_one(const State& s);

std::string move_text(const Move& m);  // "(5,6)->(4,5)" or full jump path
std::string render_board(const State& s);

class CheckersGame final : public Game {
 public:
  GameId id() const override { return GameId::Checkers; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override;
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::optional<std::string> normalize_action(
      Seat seat, const std::string& action) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const State& state() const { return st_; }
  void set_state(const State& s) { st_ = s; }

 private:
  State st_;
};

}  // namespace arena::checkers
