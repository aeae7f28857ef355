#include "arena/games/checkers.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace arena::checkers {

namespace {

bool enemy(Cell mover, Cell other) {
  return is_black(mover) ? is_white(other) : is_black(other);
}

// Diagonal step directions a piece may take: men move toward the
// opponent only (Black toward row 0), kings any of the four.
std::vector<std::array<int, 2>> piece_dirs(Cell piece) {
  if (is_king(piece)) return {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  int dr = is_black(piece) ? -1 : 1;
  return {{dr, -1}, {dr, 1}};
}

// Depth-first extension of a capture chain.  Captured pieces leave the
// board as soon as they are jumped; a jump continues while another jump
// is available from the landing square.
void extend_jumps(State board, Cell piece, Coord from, Move so_far,
                  std::vector<Move>& out) {
  bool extended = false;
  for (const auto& d : piece_dirs(piece)) {
    int mr = from.a + d[0], mc = from.b + d[1];
    int lr = from.a + 2 * d[0], lc = from.b + 2 * d[1];
    if (!State::in_bounds(lr, lc)) continue;
    if (!enemy(piece, board.at(mr, mc)) || board.at(lr, lc) != Cell::Empty)
      continue;
    extended = true;
    State next = board;
    next.at(mr, mc) = Cell::Empty;
    next.at(from.a, from.b) = Cell::Empty;
    next.at(lr, lc) = piece;
    Move m = so_far;
    m.path.push_back({lr, lc});
    m.captured.push_back({mr, mc});
    extend_jumps(next, piece, {lr, lc}, m, out);
  }
  if (!extended && so_far.is_capture()) out.push_back(so_far);
}

}  // namespace

std::string State::position_key() const {
  std::string key(65, '.');
  for (int i = 0; i < 64; ++i) {
    static const char kChars[] = {'_', 'b', 'B', 'w', 'W'};
    key[i] = kChars[static_cast<int>(board[i])];
  }
  key[64] = black_to_move ? 'b' : 'w';
  return key;
}

State initial_state() {
  State s;
  s.board.fill(Cell::Empty);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if ((r + c) % 2 != 1) continue;  // light squares stay empty
      if (r <= 2) s.at(r, c) = Cell::WhiteMan;
      if (r >= 5) s.at(r, c) = Cell::BlackMan;
    }
  }
  s.black_to_move = true;
  s.halfmove_no_capture = 0;
  s.position_history[s.position_key()] = 1;
  return s;
}

std::vector<Move> legal_moves(const State& s) {
  std::vector<Move> jumps;
  std::vector<Move> steps;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      Cell piece = s.at(r, c);
      if (piece == Cell::Empty) continue;
      if (is_black(piece) != s.black_to_move) continue;
      Move seed;
      seed.path.push_back({r, c});
      extend_jumps(s, piece, {r, c}, seed, jumps);
      if (jumps.empty()) {
        for (const auto& d : piece_dirs(piece)) {
          int nr = r + d[0], nc = c + d[1];
          if (State::in_bounds(nr, nc) && s.at(nr, nc) == Cell::Empty) {
            Move m;
            m.path = {{r, c}, {nr, nc}};
            steps.push_back(m);
          }
        }
      }
    }
  }
  std::vector<Move>& out = jumps.empty() ? steps : jumps;
  std::sort(out.begin(), out.end());
  return out;
}

State apply(const State& s, const Move& m) {
  auto legal = legal_moves(s);
  if (std::find(legal.begin(), legal.end(), m) == legal.end())
    throw std::invalid_argument("illegal checkers move");
  State next = s;
  Coord from = m.path.front();
  Coord to = m.path.back();
  Cell piece = next.at(from.a, from.b);
  next.at(from.a, from.b) = Cell::Empty;
  for (Coord cap : m.captured) next.at(cap.a, cap.b) = Cell::Empty;
  // Promotion happens exactly when the move ends on the far row.
  if (piece == Cell::BlackMan && to.a == 0) piece = Cell::BlackKing;
  if (piece == Cell::WhiteMan && to.a == 7) piece = Cell::WhiteKing;
  next.at(to.a, to.b) = piece;
  next.halfmove_no_capture = m.is_capture() ? 0 : s.halfmove_no_capture + 1;
  next.black_to_move = !s.black_to_move;
  next.position_history[next.position_key()] += 1;
  return next;
}

Outcome outcome(const State& s) {
  auto it = s.position_history.find(s.position_key());
  if (it != s.position_history.end() && it->second >= 3) return Outcome::Draw;
  if (s.halfmove_no_capture >= 40) return Outcome::Draw;
  if (legal_moves(s).empty()) {
    // The side that cannot move loses; Black is the first seat.
    return s.black_to_move ? Outcome::SecondWins : Outcome::FirstWins;
  }
  return Outcome::Ongoing;
}

std::vector<Move> oracle_new_king(const State& s) {
  std::vector<Move> out;
  for (const Move& m : legal_moves(s)) {
    Cell piece = s.at(m.path.front().a, m.path.front().b);
    Coord to = m.path.back();
    bool promotes = (piece == Cell::BlackMan && to.a == 0) ||
                    (piece == Cell::WhiteMan && to.a == 7);
    if (promotes) out.push_back(m);
  }
  return out;
}

namespace {

// True when `moves` contains a capture taking the piece on `square`.
bool any_capture_of(const std::vector<Move>& moves, Coord square) {
  for (const Move& m : moves)
    for (Coord cap : m.captured)
      if (cap == square) return true;
  return false;
}

}  // namespace

std::vector<Move> oracle_worthless_die(const State& s) {
  std::vector<Move> out;
  for (const Move& m : legal_moves(s)) {
    Coord moved_to = m.path.back();
    State after = apply(s, m);
    bool worthless = false;
    for (const Move& reply : legal_moves(after)) {
      bool takes_moved = false;
      for (Coord cap : reply.captured) takes_moved |= (cap == moved_to);
      if (!takes_moved) continue;
      State after_reply = apply(after, reply);
      if (!any_capture_of(legal_moves(after_reply), reply.path.back())) {
        worthless = true;
        break;
      }
    }
    if (worthless) out.push_back(m);
  }
  return out;
}

std::vector<Move> oracle_two_for_one(const State& s) {
  std::vector<Move> out;
  for (const Move& m : legal_moves(s)) {
    Coord moved_to = m.path.back();
    State after = apply(s, m);
    auto replies = legal_moves(after);
    if (replies.empty()) continue;
    bool all_forced = true;
    for (const Move& reply : replies) {
      if (reply.captured.size() != 1 || reply.captured[0] != moved_to) {
        all_forced = false;
        break;
      }
    }
    if (!all_forced) continue;
    bool pays_off = false;
    for (const Move& reply : replies) {
      State after_reply = apply(after, reply);
      for (const Move& counter : legal_moves(after_reply)) {
        if (counter.captured.size() >= 2) {
          pays_off = true;
          break;
        }
      }
      if (pays_off) break;
    }
    if (pays_off) out.push_back(m);
  }
  return out;
}

std::string move_text(const Move& m) {
  std::string out;
  for (size_t i = 0; i < m.path.size(); ++i) {
    if (i) out += "->";
    out += "(" + std::to_string(m.path[i].a) + "," +
           std::to_string(m.path[i].b) + ")";
  }
  return out;
}

std::string render_board(const State& s) {
  static const char kChars[] = {'_', 'b', 'B', 'w', 'W'};
  std::string out;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      out += "(" + std::to_string(r) + "," + std::to_string(c) + "):";
      out += kChars[static_cast<int>(s.at(r, c))];
      out += ' ';
    }
    out += '\n';
  }
  return out;
}

namespace {

// Parses "(a,b)->(c,d)[->...]" into the visited-square list.
std::optional<MovePath> parse_path(const std::string& text) {
  MovePath path;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] != '(') return std::nullopt;
    ++i;
    int vals[2];
    for (int k = 0; k < 2; ++k) {
      skip_ws();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        return std::nullopt;
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      vals[k] = v;
      skip_ws();
      char expect = k == 0 ? ',' : ')';
      if (i >= text.size() || text[i] != expect) return std::nullopt;
      ++i;
    }
    path.push_back({vals[0], vals[1]});
    skip_ws();
    if (i >= text.size()) break;
    if (text.compare(i, 2, "->") != 0) return std::nullopt;
    i += 2;
  }
  if (path.size() < 2) return std::nullopt;
  return path;
}

}  // namespace

void CheckersGame::reset(RngStream&) { st_ = initial_state(); }

GameResult CheckersGame::result() const {
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

Seat CheckersGame::to_move() const {
  return st_.black_to_move ? Seat::First : Seat::Second;
}

std::vector<std::string> CheckersGame::legal_actions(Seat seat) const {
  std::vector<std::string> out;
  if (to_move() != seat) return out;
  for (const Move& m : legal_moves(st_)) out.push_back(move_text(m));
  return out;
}

std::optional<std::string> CheckersGame::normalize_action(
    Seat seat, const std::string& action) const {
  if (to_move() != seat) return std::nullopt;
  auto path = parse_path(action);
  if (!path) return std::nullopt;
  auto legal = legal_moves(st_);
  for (const Move& m : legal)
    if (m.path == *path) return move_text(m);
  // The reply format shows only "(X,X)->(X,X)": accept start plus final
  // landing when they identify a unique jump chain.
  if (path->size() == 2) {
    const Move* found = nullptr;
    for (const Move& m : legal) {
      if (m.path.front() == path->front() && m.path.back() == path->back()) {
        if (found) return std::nullopt;  // ambiguous
        found = &m;
      }
    }
    if (found) return move_text(*found);
  }
  return std::nullopt;
}

std::string CheckersGame::state_text(Seat) const {
  std::string out = render_board(st_);
  out += "All legal moves: [";
  bool first = true;
  for (const Move& m : legal_moves(st_)) {
    if (!first) out += ", ";
    first = false;
    out += "'" + move_text(m) + "'";
  }
  out += "]";
  return out;
}

std::vector<Payload> CheckersGame::compute_truths(Seat viewer) const {
  std::vector<Payload> t(3, Payload{std::monostate{}});
  if (to_move() != viewer) return t;
  auto to_paths = [](const std::vector<Move>& moves) {
    PathSet out;
    for (const Move& m : moves) out.insert(m.path);
    return out;
  };
  t[0] = to_paths(oracle_new_king(st_));
  t[1] = to_paths(oracle_worthless_die(st_));
  t[2] = to_paths(oracle_two_for_one(st_));
  return t;
}

void CheckersGame::apply(Seat seat, const std::string& action, RngStream&) {
  if (to_move() != seat) throw std::invalid_argument("not seat's turn");
  auto path = parse_path(action);
  if (!path) throw std::invalid_argument("unparseable checkers action");
  for (const Move& m : legal_moves(st_)) {
    if (m.path == *path) {
      st_ = checkers::apply(st_, m);
      return;
    }
  }
  throw std::invalid_argument("illegal checkers action");
}

std::string CheckersGame::reply_for_action(const std::string& action) const {
  return "Chosen Move: " + action;
}

}  // namespace arena::checkers
