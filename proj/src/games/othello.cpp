#include "arena/games/othello.hpp"

#include <cctype>
#include <stdexcept>

namespace arena::othello {

namespace {

constexpr int kDirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                             {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};

// Number of opponent discs flipped in one direction if `mover` plays at
// (col,row); 0 when the line is not outflanked.
int line_flips(const State& s, Cell mover, int col, int row, int dc, int dr) {
  Cell opp = other_cell(mover);
  int n = 0;
  int c = col + dc, r = row + dr;
  while (State::in_bounds(c, r) && s.at(c, r) == opp) {
    ++n;
    c += dc;
    r += dr;
  }
  if (n == 0 || !State::in_bounds(c, r) || s.at(c, r) != mover) return 0;
  return n;
}

bool can_place(const State& s, Cell side, int col, int row) {
  if (s.at(col, row) != Cell::Empty) return false;
  for (const auto& d : kDirs)
    if (line_flips(s, side, col, row, d[0], d[1]) > 0) return true;
  return false;
}

bool has_move(const State& s, Cell side) {
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col)
      if (can_place(s, side, col, row)) return true;
  return false;
}

}  // namespace

State initial_state() {
  State s;
  s.board.fill(Cell::Empty);
  // Columns D,E are indices 3,4; rows 4,5 are indices 3,4.
  s.at(3, 3) = Cell::Black;  // (D,4)
  s.at(4, 4) = Cell::Black;  // (E,5)
  s.at(3, 4) = Cell::White;  // (D,5)
  s.at(4, 3) = Cell::White;  // (E,4)
  s.to_move = Cell::Black;
  s.consecutive_passes = 0;
  return s;
}

bool is_legal(const State& s, Coord m) {
  if (!State::in_bounds(m.a, m.b)) return false;
  return can_place(s, s.to_move, m.a, m.b);
}

CoordSet legal_moves(const State& s) {
  CoordSet out;
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col)
      if (is_legal(s, {col, row})) out.insert({col, row});
  return out;
}

State place_and_flip(const State& s, Coord m) {
  if (!is_legal(s, m)) throw std::invalid_argument("illegal othello move");
  State next = s;
  Cell mover = s.to_move;
  next.at(m.a, m.b) = mover;
  for (const auto& d : kDirs) {
    int n = line_flips(s, mover, m.a, m.b, d[0], d[1]);
    int c = m.a + d[0], r = m.b + d[1];
    for (int i = 0; i < n; ++i) {
      next.at(c, r) = mover;
      c += d[0];
      r += d[1];
    }
  }
  next.to_move = other_cell(mover);
  next.consecutive_passes = 0;
  return next;
}

State apply(const State& s, Coord m) {
  State next = place_and_flip(s, m);
  if (!has_move(next, next.to_move)) {
    // Opponent forfeits the turn; if the mover is stuck too, the game is
    // over and the pass counter saturates at 2.
    Cell mover = other_cell(next.to_move);
    next.consecutive_passes = 1;
    if (has_move(next, mover)) {
      next.to_move = mover;
    } else {
      next.consecutive_passes = 2;
    }
  }
  return next;
}

int disc_count(const State& s, Cell c) {
  int n = 0;
  for (Cell x : s.board)
    if (x == c) ++n;
  return n;
}

Outcome outcome(const State& s) {
  if (has_move(s, Cell::Black) || has_move(s, Cell::White))
    return Outcome::Ongoing;
  int black = disc_count(s, Cell::Black);
  int white = disc_count(s, Cell::White);
  if (black > white) return Outcome::FirstWins;
  if (white > black) return Outcome::SecondWins;
  return Outcome::Draw;
}

bool oracle_corner(const State& s) {
  static const Coord kCorners[4] = {{0, 0}, {0, 7}, {7, 0}, {7, 7}};
  for (Coord c : kCorners)
    if (is_legal(s, c)) return true;
  return false;
}

CoordSet oracle_wedges(const State& s) {
  Cell opp = other_cell(s.to_move);
  CoordSet out;
  // The four edges as coordinate sequences of 8 squares each.
  std::vector<std::array<Coord, 8>> edges;
  std::array<Coord, 8> e;
  for (int c = 0; c < 8; ++c) e[c] = {c, 0};
  edges.push_back(e);
  for (int c = 0; c < 8; ++c) e[c] = {c, 7};
  edges.push_back(e);
  for (int r = 0; r < 8; ++r) e[r] = {0, r};
  edges.push_back(e);
  for (int r = 0; r < 8; ++r) e[r] = {7, r};
  edges.push_back(e);

  for (const auto& edge : edges) {
    int i = 0;
    while (i < 8) {
      if (s.at(edge[i].a, edge[i].b) != Cell::Empty) {
        ++i;
        continue;
      }
      int j = i;
      while (j < 8 && s.at(edge[j].a, edge[j].b) == Cell::Empty) ++j;
      int len = j - i;
      bool bounded = i > 0 && j < 8 && s.at(edge[i - 1].a, edge[i - 1].b) == opp &&
                     s.at(edge[j].a, edge[j].b) == opp;
      if (bounded && (len == 1 || len == 3 || len == 5)) {
        for (int k = i; k < j; ++k)
          if (is_legal(s, edge[k])) out.insert(edge[k]);
      }
      i = j;
    }
  }
  return out;
}

std::string coord_text(Coord m) {
  std::string out = "(";
  out += static_cast<char>('A' + m.a);
  out += ",";
  out += std::to_string(m.b + 1);
  out += ")";
  return out;
}

std::optional<Coord> parse_coord(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') return std::nullopt;
  ++i;
  skip_ws();
  if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
    return std::nullopt;
  int col = std::toupper(static_cast<unsigned char>(text[i])) - 'A';
  ++i;
  skip_ws();
  if (col < 0 || col > 7 || i >= text.size() || text[i] != ',') return std::nullopt;
  ++i;
  skip_ws();
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    return std::nullopt;
  int row = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    row = row * 10 + (text[i] - '0');
    ++i;
  }
  skip_ws();
  if (row < 1 || row > 8 || i >= text.size() || text[i] != ')') return std::nullopt;
  ++i;
  skip_ws();
  if (i != text.size()) return std::nullopt;
  return Coord{col, row - 1};
}

std::string render_board(const State& s) {
  std::string out;
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      char mark = s.at(col, row) == Cell::Empty  ? 'O'
                  : s.at(col, row) == Cell::Black ? 'B'
                                                  : 'W';
      out += "(";
      out += static_cast<char>('A' + col);
      out += ",";
      out += std::to_string(row + 1);
      out += "):";
      out += mark;
      out += ' ';
    }
    out += '\n';
  }
  return out;
}

void OthelloGame::reset(RngStream&) { st_ = initial_state(); }

GameResult OthelloGame::result() const {
  GameResult r;
  Outcome o = outcome(st_);
  if (o == Outcome::Ongoing) return r;
  r.terminal = true;
  if (o == Outcome::Draw) {
    r.draw = true;
  } else {
    r.reward_first = o == Outcome::FirstWins ? 1.0 : -1.0;
    r.reward_second = -r.reward_first;
  }
  return r;
}

Seat OthelloGame::to_move() const {
  return st_.to_move == Cell::Black ? Seat::First : Seat::Second;
}

bool OthelloGame::must_pass() const {
  return outcome(st_) == Outcome::Ongoing && legal_moves(st_).empty();
}

void OthelloGame::apply_pass() {
  if (!must_pass()) throw std::logic_error("pass with moves available");
  st_.to_move = other_cell(st_.to_move);
  st_.consecutive_passes += 1;
}

std::vector<std::string> OthelloGame::legal_actions(Seat seat) const {
  std::vector<std::string> out;
  if (to_move() != seat) return out;
  for (Coord m : legal_moves(st_)) out.push_back(coord_text(m));
  return out;
}

std::string OthelloGame::state_text(Seat) const {
  // Both players see the same matrix plus the mover's legal moves, as the
  // prompt promises ("You will also be provided all of the current legal
  // moves").  Moves are listed in the matrix reading order.
  std::string out = render_board(st_);
  out += "All legal moves: [";
  bool first = true;
  std::vector<Coord> moves;
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col)
      if (is_legal(st_, {col, row})) moves.push_back({col, row});
  for (Coord m : moves) {
    if (!first) out += ", ";
    first = false;
    out += "'" + coord_text(m) + "'";
  }
  out += "]";
  return out;
}

std::vector<Payload> OthelloGame::compute_truths(Seat viewer) const {
  std::vector<Payload> t(2, Payload{std::monostate{}});
  if (to_move() != viewer || must_pass()) return t;
  t[0] = oracle_corner(st_);
  t[1] = oracle_wedges(st_);
  return t;
}

void OthelloGame::apply(Seat seat, const std::string& action, RngStream&) {
  if (to_move() != seat) throw std::invalid_argument("not seat's turn");
  auto m = parse_coord(action);
  if (!m) throw std::invalid_argument("unparseable othello action");
  st_ = place_and_flip(st_, *m);
}

std::string OthelloGame::reply_for_action(const std::string& action) const {
  return "Chosen Move: " + action;
}

}  // namespace arena::othello
