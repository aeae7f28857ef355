#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "arena/games/checkers.hpp"
#include "arena/rng.hpp"

using namespace arena;
using namespace arena::checkers;

namespace {

State board_from(const std::vector<std::pair<Coord, char>>& pieces,
                 bool black_to_move) {
  State s;
  s.board.fill(Cell::Empty);
  for (const auto& [sq, ch] : pieces) {
    Cell c = ch == 'b'   ? Cell::BlackMan
             : ch == 'B' ? Cell::BlackKing
             : ch == 'w' ? Cell::WhiteMan
                         : Cell::WhiteKing;
    s.at(sq.a, sq.b) = c;
  }
  s.black_to_move = black_to_move;
  s.position_history[s.position_key()] = 1;
  return s;
}

int piece_count(const State& s, bool black) {
  int n = 0;
  for (Cell c : s.board) n += black ? is_black(c) : is_white(c);
  return n;
}

State random_position(RngStream& rng) {
  State s = initial_state();
  int k = rng.uniform_int(0, 60);
  for (int i = 0; i < k; ++i) {
    if (outcome(s) != Outcome::Ongoing) break;
    auto moves = legal_moves(s);
    if (moves.empty()) break;
    s = apply(s, moves[rng.uniform(moves.size())]);
  }
  return s;
}

// Independent 2-ply check of the worthless-die definition, written
// directly from its two clauses.
bool naive_worthless(const State& s, const Move& m) {
  Coord moved_to = m.path.back();
  State after = apply(s, m);
  for (const Move& reply : legal_moves(after)) {
    if (std::find(reply.captured.begin(), reply.captured.end(), moved_to) ==
        reply.captured.end())
      continue;
    State after_reply = apply(after, reply);
    Coord capturer = reply.path.back();
    bool recapture = false;
    for (const Move& counter : legal_moves(after_reply)) {
      for (Coord cap : counter.captured) recapture |= (cap == capturer);
    }
    if (!recapture) return true;
  }
  return false;
}

// Independent 3-ply check of the two-for-one definition.
bool naive_two_for_one(const State& s, const Move& m) {
  Coord moved_to = m.path.back();
  State after = apply(s, m);
  auto replies = legal_moves(after);
  if (replies.empty()) return false;
  for (const Move& reply : replies) {
    if (!(reply.captured.size() == 1 && reply.captured[0] == moved_to))
      return false;
  }
  for (const Move& reply : replies) {
    State after_reply = apply(after, reply);
    for (const Move& counter : legal_moves(after_reply))
      if (counter.captured.size() >= 2) return true;
  }
  return false;
}

std::vector<Move> filter_moves(const State& s,
                               bool (*pred)(const State&, const Move&)) {
  std::vector<Move> out;
  for (const Move& m : legal_moves(s))
    if (pred(s, m)) out.push_back(m);
  return out;
}

}  // namespace

TEST_SUITE("checkers") {

TEST_CASE("initial position has 12 pieces each and 7 black moves") {
  State s = initial_state();
  CHECK(piece_count(s, true) == 12);
  CHECK(piece_count(s, false) == 12);
  CHECK(s.at(7, 2) == Cell::BlackMan);
  CHECK(s.at(0, 1) == Cell::WhiteMan);
  CHECK(s.at(0, 0) == Cell::Empty);  // light square
  auto moves = legal_moves(s);
  CHECK(moves.size() == 7);
  for (const Move& m : moves) CHECK(!m.is_capture());
  CHECK(outcome(s) == Outcome::Ongoing);
}

TEST_CASE("pieces sit on dark squares only") {
  State s = initial_state();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if ((r + c) % 2 == 0) CHECK(s.at(r, c) == Cell::Empty);
}

TEST_CASE("forced capture: the jump must be made") {
  State s = board_from({{{3, 2}, 'b'}, {{2, 3}, 'w'}}, true);
  auto moves = legal_moves(s);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].path == MovePath{{3, 2}, {1, 4}});
  CHECK(moves[0].captured == std::vector<Coord>{{2, 3}});
}

TEST_CASE("a jump chain continues while another jump is available") {
  // Black jumps (5,2)->(3,4)->(1,6); the one-capture prefix is illegal.
  State s = board_from({{{5, 2}, 'b'}, {{4, 3}, 'w'}, {{2, 5}, 'w'}}, true);
  auto moves = legal_moves(s);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].path == MovePath{{5, 2}, {3, 4}, {1, 6}});
  CHECK(moves[0].captured.size() == 2);
}

TEST_CASE("branching chains let the player choose") {
  // From (5,4) black may jump left or right; both branches are returned.
  State s = board_from(
      {{{5, 4}, 'b'}, {{4, 3}, 'w'}, {{4, 5}, 'w'}}, true);
  auto moves = legal_moves(s);
  CHECK(moves.size() == 2);
}

TEST_CASE("men jump forward only; kings jump both ways") {
  State men = board_from({{{3, 2}, 'b'}, {{4, 3}, 'w'}, {{2, 3}, 'w'}}, true);
  auto man_moves = legal_moves(men);
  REQUIRE(man_moves.size() == 1);  // only the forward jump over (2,3)
  CHECK(man_moves[0].path == MovePath{{3, 2}, {1, 4}});

  State kings = board_from({{{3, 2}, 'B'}, {{4, 3}, 'w'}, {{2, 3}, 'w'}}, true);
  CHECK(legal_moves(kings).size() == 2);
}

TEST_CASE("promotion happens exactly on the far row") {
  State s = board_from({{{1, 2}, 'b'}, {{5, 5}, 'w'}}, true);
  auto moves = legal_moves(s);
  bool found = false;
  for (const Move& m : moves) {
    if (m.path == MovePath{{1, 2}, {0, 1}}) {
      State after = apply(s, m);
      CHECK(after.at(0, 1) == Cell::BlackKing);
      found = true;
    }
  }
  CHECK(found);

  // White promotes on row 7.
  State w = board_from({{{6, 5}, 'w'}, {{1, 2}, 'b'}}, false);
  for (const Move& m : legal_moves(w)) {
    if (m.path.back().a == 7) {
      State after = apply(w, m);
      CHECK(after.at(m.path.back().a, m.path.back().b) == Cell::WhiteKing);
    }
  }
}

TEST_CASE("capture removes pieces and resets the no-capture counter") {
  State s = board_from({{{3, 2}, 'b'}, {{2, 3}, 'w'}, {{0, 1}, 'w'}}, true);
  s.halfmove_no_capture = 17;
  auto moves = legal_moves(s);
  REQUIRE(moves.size() == 1);
  State after = apply(s, moves[0]);
  CHECK(piece_count(after, false) == 1);
  CHECK(after.halfmove_no_capture == 0);
}

TEST_CASE("40 halfmoves without a capture draws") {
  State s = board_from({{{0, 1}, 'B'}, {{7, 6}, 'W'}}, true);
  s.halfmove_no_capture = 39;
  CHECK(outcome(s) == Outcome::Ongoing);
  auto moves = legal_moves(s);
  REQUIRE(!moves.empty());
  State after = apply(s, moves[0]);
  CHECK(after.halfmove_no_capture == 40);
  CHECK(outcome(after) == Outcome::Draw);
}

TEST_CASE("threefold repetition draws") {
  State s = board_from({{{0, 1}, 'B'}, {{7, 6}, 'W'}}, true);
  // Rock both kings between two squares; the start position recurs.
  const MovePath b_out = {{0, 1}, {1, 0}}, b_back = {{1, 0}, {0, 1}};
  const MovePath w_out = {{7, 6}, {6, 7}}, w_back = {{6, 7}, {7, 6}};
  auto play = [&](const MovePath& path) {
    for (const Move& m : legal_moves(s)) {
      if (m.path == path) {
        s = apply(s, m);
        return;
      }
    }
    FAIL("expected move missing");
  };
  int rounds = 0;
  while (outcome(s) == Outcome::Ongoing && rounds++ < 10) {
    play(b_out);
    if (outcome(s) != Outcome::Ongoing) break;
    play(w_out);
    if (outcome(s) != Outcome::Ongoing) break;
    play(b_back);
    if (outcome(s) != Outcome::Ongoing) break;
    play(w_back);
  }
  CHECK(outcome(s) == Outcome::Draw);
  CHECK(s.halfmove_no_capture < 40);  // the repetition rule fired first
}

TEST_CASE("side with no legal move loses") {
  // Lone black man trapped in the double corner by white kings.
  State s = board_from(
      {{{7, 0}, 'b'}, {{6, 1}, 'W'}, {{5, 0}, 'W'}, {{5, 2}, 'W'}}, true);
  // Black at (7,0) moves toward row 0 via (6,1): occupied; jump lands at
  // (5,2): occupied.  No move for Black, so White wins.
  CHECK(outcome(s) == Outcome::SecondWins);
}

TEST_CASE("worked worthless-die board flags exactly (1,4)->(2,3)") {
  State s = board_from({{{1, 4}, 'w'}, {{3, 2}, 'b'}}, false);
  auto bad = oracle_worthless_die(s);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].path == MovePath{{1, 4}, {2, 3}});
  CHECK(move_text(bad[0]) == "(1,4)->(2,3)");
}

TEST_CASE("recapture protection clears the worthless flag") {
  // As above, but a white piece on (0,5) can take the capturer back.
  State s = board_from({{{1, 4}, 'w'}, {{3, 2}, 'b'}, {{0, 5}, 'w'}}, false);
  for (const Move& m : oracle_worthless_die(s))
    CHECK(m.path != MovePath{{1, 4}, {2, 3}});
}

TEST_CASE("worked two-for-one board flags exactly (5,6)->(4,5)") {
  State s = board_from({{{1, 4}, 'w'},
                        {{3, 4}, 'w'},
                        {{3, 6}, 'w'},
                        {{5, 4}, 'b'},
                        {{5, 6}, 'b'},
                        {{6, 7}, 'b'}},
                       true);
  auto shots = oracle_two_for_one(s);
  REQUIRE(shots.size() == 1);
  CHECK(shots[0].path == MovePath{{5, 6}, {4, 5}});

  // Following the line: White is forced to capture, then Black takes two.
  State after = apply(s, shots[0]);
  auto replies = legal_moves(after);
  REQUIRE(replies.size() == 1);
  CHECK(replies[0].captured == std::vector<Coord>{{4, 5}});
  State after_reply = apply(after, replies[0]);
  bool double_jump = false;
  for (const Move& counter : legal_moves(after_reply))
    double_jump |= counter.path == MovePath{{6, 7}, {4, 5}, {2, 7}};
  CHECK(double_jump);
}

TEST_CASE("new-king oracle equals apply-and-check on random positions") {
  RngStream rng(424242);
  for (int i = 0; i < 400; ++i) {
    State s = random_position(rng);
    if (outcome(s) != Outcome::Ongoing) continue;
    std::vector<Move> expect;
    for (const Move& m : legal_moves(s)) {
      int kings_before = 0, kings_after = 0;
      for (Cell c : s.board) kings_before += is_king(c) && (is_black(c) == s.black_to_move);
      State after = apply(s, m);
      for (Cell c : after.board) kings_after += is_king(c) && (is_black(c) == s.black_to_move);
      if (kings_after > kings_before) expect.push_back(m);
    }
    CHECK(oracle_new_king(s) == expect);
  }
}

TEST_CASE("worthless-die oracle equals the 2-ply enumerator") {
  RngStream rng(171717);
  for (int i = 0; i < 300; ++i) {
    State s = random_position(rng);
    if (outcome(s) != Outcome::Ongoing) continue;
    CHECK(oracle_worthless_die(s) == filter_moves(s, naive_worthless));
  }
}

TEST_CASE("two-for-one oracle equals the 3-ply enumerator") {
  RngStream rng(272727);
  for (int i = 0; i < 300; ++i) {
    State s = random_position(rng);
    if (outcome(s) != Outcome::Ongoing) continue;
    CHECK(oracle_two_for_one(s) == filter_moves(s, naive_two_for_one));
  }
}

TEST_CASE("oracle outputs are always legal moves") {
  RngStream rng(55);
  for (int i = 0; i < 200; ++i) {
    State s = random_position(rng);
    if (outcome(s) != Outcome::Ongoing) continue;
    auto legal = legal_moves(s);
    auto contains = [&](const Move& m) {
      return std::find(legal.begin(), legal.end(), m) != legal.end();
    };
    for (const Move& m : oracle_new_king(s)) CHECK(contains(m));
    for (const Move& m : oracle_worthless_die(s)) CHECK(contains(m));
    for (const Move& m : oracle_two_for_one(s)) CHECK(contains(m));
  }
}

TEST_CASE("piece counts never increase") {
  RngStream rng(31);
  State s = initial_state();
  int black = 12, white = 12;
  while (outcome(s) == Outcome::Ongoing) {
    auto moves = legal_moves(s);
    s = apply(s, moves[rng.uniform(moves.size())]);
    int nb = piece_count(s, true), nw = piece_count(s, false);
    CHECK(nb <= black);
    CHECK(nw <= white);
    black = nb;
    white = nw;
  }
}

TEST_CASE("render and move text match the prompt conventions") {
  State s = initial_state();
  std::string text = render_board(s);
  CHECK(text.find("(0,1):w") != std::string::npos);
  CHECK(text.find("(7,2):b") != std::string::npos);
  CHECK(text.find("(3,3):_") != std::string::npos);

  CheckersGame g;
  RngStream env(1);
  g.reset(env);
  CHECK(g.to_move() == Seat::First);
  CHECK(g.legal_actions(Seat::First).size() == 7);
  CHECK(g.state_text(Seat::First).find("All legal moves: [") != std::string::npos);
  CHECK(g.reply_for_action("(5,0)->(4,1)") == "Chosen Move: (5,0)->(4,1)");
}

TEST_CASE("endpoint shorthand resolves unique jump chains") {
  CheckersGame g;
  RngStream env(1);
  g.reset(env);
  State s = board_from({{{5, 2}, 'b'}, {{4, 3}, 'w'}, {{2, 5}, 'w'}}, true);
  g.set_state(s);
  auto norm = g.normalize_action(Seat::First, "(5,2)->(1,6)");
  REQUIRE(norm.has_value());
  CHECK(*norm == "(5,2)->(3,4)->(1,6)");
  CHECK(!g.normalize_action(Seat::First, "(5,2)->(3,4)").has_value());

  // Ambiguous endpoints (two chains, same start and end-ish) are refused.
  State amb = board_from({{{5, 2}, 'B'},
                          {{4, 3}, 'w'},
                          {{2, 3}, 'w'},
                          {{4, 1}, 'w'},
                          {{2, 1}, 'w'}},
                         true);
  g.set_state(amb);
  auto chains = g.legal_actions(Seat::First);
  CHECK(chains.size() >= 2);
  CHECK(!g.normalize_action(Seat::First, "(5,2)->(5,2)").has_value());
}

TEST_CASE("truths carry three path sets for the mover only") {
  CheckersGame g;
  RngStream env(9);
  g.reset(env);
  auto truths = g.compute_truths(Seat::First);
  REQUIRE(truths.size() == 3);
  CHECK(std::get<PathSet>(truths[0]).empty());
  CHECK(std::get<PathSet>(truths[1]).empty());  // opening has no tactics
  auto hidden = g.compute_truths(Seat::Second);
  CHECK(!is_defined(hidden[0]));
}

}  // TEST_SUITE
