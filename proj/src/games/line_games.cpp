#include "arena/games/line_games.hpp"

#include <cctype>
#include <stdexcept>

namespace arena::grid {

GridState tictactoe_initial() {
  GridState s;
  s.rows = 3;
  s.cols = 3;
  s.win_length = 3;
  s.gravity = false;
  s.cells.assign(9, Mark::Empty);
  s.to_move = Mark::X;
  return s;
}

GridState connect4_initial() {
  GridState s;
  s.rows = 6;
  s.cols = 7;
  s.win_length = 4;
  s.gravity = true;
  s.cells.assign(42, Mark::Empty);
  s.to_move = Mark::X;
  return s;
}

CoordSet legal_moves(const GridState& s) {
  CoordSet out;
  if (s.gravity) {
    for (int c = 0; c < s.cols; ++c) {
      for (int r = 0; r < s.rows; ++r) {
        if (s.at(r, c) == Mark::Empty) {
          out.insert({r, c});
          break;
        }
      }
    }
  } else {
    for (int r = 0; r < s.rows; ++r)
      for (int c = 0; c < s.cols; ++c)
        if (s.at(r, c) == Mark::Empty) out.insert({r, c});
  }
  return out;
}

bool is_legal(const GridState& s, Coord m) {
  if (!s.in_bounds(m.a, m.b) || s.at(m.a, m.b) != Mark::Empty) return false;
  if (s.gravity && m.a > 0 && s.at(m.a - 1, m.b) == Mark::Empty) return false;
  return true;
}

GridState apply(const GridState& s, Coord m) {
  if (!is_legal(s, m)) throw std::invalid_argument("illegal grid move");
  GridState next = s;
  next.at(m.a, m.b) = s.to_move;
  next.to_move = other_mark(s.to_move);
  return next;
}

namespace {

bool has_line(const GridState& s, Mark m) {
  static const int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (int r = 0; r < s.rows; ++r) {
    for (int c = 0; c < s.cols; ++c) {
      if (s.at(r, c) != m) continue;
      for (const auto& d : kDirs) {
        int run = 1;
        int rr = r + d[0], cc = c + d[1];
        while (s.in_bounds(rr, cc) && s.at(rr, cc) == m) {
          ++run;
          rr += d[0];
          cc += d[1];
        }
        if (run >= s.win_length) return true;
      }
    }
  }
  return false;
}

// A placement at `m` completes a line iff a long-enough run of `mark`
// passes through `m` itself; lines already on the board elsewhere do not
// count as "completed by" the move.
bool line_through(const GridState& s, Coord m, Mark mark) {
  static const int kAxes[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (const auto& ax : kAxes) {
    int run = 1;
    for (int sign : {1, -1}) {
      int r = m.a + sign * ax[0], c = m.b + sign * ax[1];
      while (s.in_bounds(r, c) && s.at(r, c) == mark) {
        ++run;
        r += sign * ax[0];
        c += sign * ax[1];
      }
    }
    if (run >= s.win_length) return true;
  }
  return false;
}

bool board_full(const GridState& s) {
  for (Mark m : s.cells)
    if (m == Mark::Empty) return false;
  return true;
}

}  // namespace

Outcome outcome(const GridState& s) {
  if (has_line(s, Mark::X)) return Outcome::FirstWins;
  if (has_line(s, Mark::O)) return Outcome::SecondWins;
  if (board_full(s)) return Outcome::Draw;
  return Outcome::Ongoing;
}

CoordSet winning_moves(const GridState& s, ForWhom who) {
  Mark mark = who == ForWhom::Mover ? s.to_move : other_mark(s.to_move);
  CoordSet out;
  for (Coord m : legal_moves(s)) {
    GridState trial = s;
    trial.at(m.a, m.b) = mark;
    if (line_through(trial, m, mark)) out.insert(m);
  }
  return out;
}

std::string render(const GridState& s) {
  std::string out;
  // Connect4 is printed highest row first ("Row 0 is the lowest");
  // TicTacToe reads top-to-bottom from row 0.
  for (int i = 0; i < s.rows; ++i) {
    int r = s.gravity ? s.rows - 1 - i : i;
    for (int c = 0; c < s.cols; ++c) {
      char mark = s.at(r, c) == Mark::Empty ? '_'
                  : s.at(r, c) == Mark::X   ? 'X'
                                            : 'O';
      out += "(" + std::to_string(r) + "," + std::to_string(c) + "):";
      out += mark;
      out += ' ';
    }
    out += '\n';
  }
  return out;
}

std::string coord_action(Coord m) {
  return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

std::optional<Coord> parse_coord_action(const std::string& text) {
  // Expects "(a,b)" with optional interior spaces.
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') return std::nullopt;
  ++i;
  auto read_int = [&]() -> std::optional<int> {
    skip_ws();
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return std::nullopt;
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  };
  auto a = read_int();
  skip_ws();
  if (!a || i >= text.size() || text[i] != ',') return std::nullopt;
  ++i;
  auto b = read_int();
  skip_ws();
  if (!b || i >= text.size() || text[i] != ')') return std::nullopt;
  ++i;
  skip_ws();
  if (i != text.size()) return std::nullopt;
  return Coord{*a, *b};
}

namespace {

GameResult grid_result(const GridState& s) {
  GameResult r;
  switch (outcome(s)) {
    case Outcome::Ongoing:
      return r;
    case Outcome::FirstWins:
      r.terminal = true;
      r.reward_first = 1.0;
      r.reward_second = -1.0;
      return r;
    case Outcome::SecondWins:
      r.terminal = true;
      r.reward_first = -1.0;
      r.reward_second = 1.0;
      return r;
    case Outcome::Draw:
      r.terminal = true;
      r.draw = true;
      return r;
  }
  return r;
}

Seat grid_to_move(const GridState& s) {
  return s.to_move == Mark::X ? Seat::First : Seat::Second;
}

std::vector<std::string> grid_actions(const GridState& s, Seat seat) {
  std::vector<std::string> out;
  if (grid_to_move(s) != seat) return out;
  for (Coord m : legal_moves(s)) out.push_back(coord_action(m));
  return out;
}

std::vector<Payload> grid_truths(const GridState& s, Seat viewer) {
  // Truths are posed to the side about to act; on the opponent's turn the
  // subproblems are not asked and stay undefined.
  std::vector<Payload> t(2, Payload{std::monostate{}});
  if (grid_to_move(s) != viewer) return t;
  t[0] = winning_moves(s, ForWhom::Mover);
  t[1] = winning_moves(s, ForWhom::Opponent);
  return t;
}

void grid_apply_action(GridState& s, Seat seat, const std::string& action) {
  if (grid_to_move(s) != seat) throw std::invalid_argument("not seat's turn");
  auto m = parse_coord_action(action);
  if (!m || !is_legal(s, *m)) throw std::invalid_argument("illegal grid action");
  s = apply(s, *m);
}

}  // namespace

void TicTacToeGame::reset(RngStream&) { st_ = tictactoe_initial(); }
GameResult TicTacToeGame::result() const { return grid_result(st_); }
Seat TicTacToeGame::to_move() const { return grid_to_move(st_); }
std::vector<std::string> TicTacToeGame::legal_actions(Seat seat) const {
  return grid_actions(st_, seat);
}
std::string TicTacToeGame::state_text(Seat) const { return render(st_); }
std::vector<Payload> TicTacToeGame::compute_truths(Seat viewer) const {
  return grid_truths(st_, viewer);
}
void TicTacToeGame::apply(Seat seat, const std::string& action, RngStream&) {
  grid_apply_action(st_, seat, action);
}
std::string TicTacToeGame::reply_for_action(const std::string& action) const {
  return "Chosen Move: " + action;
}

void Connect4Game::reset(RngStream&) { st_ = connect4_initial(); }
GameResult Connect4Game::result() const { return grid_result(st_); }
Seat Connect4Game::to_move() const { return grid_to_move(st_); }
std::vector<std::string> Connect4Game::legal_actions(Seat seat) const {
  return grid_actions(st_, seat);
}
std::string Connect4Game::state_text(Seat) const { return render(st_); }
std::vector<Payload> Connect4Game::compute_truths(Seat viewer) const {
  return grid_truths(st_, viewer);
}
void Connect4Game::apply(Seat seat, const std::string& action, RngStream&) {
  grid_apply_action(st_, seat, action);
}
std::string Connect4Game::reply_for_action(const std::string& action) const {
  return "Chosen Move: " + action;
}

}  // namespace arena::grid
