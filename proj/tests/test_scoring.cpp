#include <doctest.h>

#include <string>
#include <vector>

#include "arena/agents.hpp"
#include "arena/scoring.hpp"

using namespace arena;
using namespace arena::scoring;
using agents::AgentKind;

namespace {

ScoredPair pair_of(Payload pred, Payload truth) {
  return {std::move(pred), std::move(truth)};
}

MatchRecord bare_record(GameId id, const std::string& a, const std::string& b,
                        double r1, double r2, double cap) {
  MatchRecord rec;
  rec.config.game_id = id;
  rec.agent_ids = {a, b};
  rec.reward_first = r1;
  rec.reward_second = r2;
  rec.reward_cap = cap;
  return rec;
}

TurnRecord turn_of(int index, Seat seat, std::vector<Payload> truths,
                   std::vector<protocol::Extraction> markers) {
  TurnRecord tr;
  tr.turn_index = index;
  tr.seat = seat;
  tr.state_text = "s";
  tr.prompt_text = "p";
  tr.raw_reply = "r";
  tr.parsed.action = {true, "(0,0)", {0, 5}};
  tr.parsed.intermediates = std::move(markers);
  tr.truths = std::move(truths);
  tr.action_taken = "(0,0)";
  return tr;
}

protocol::Extraction found(Payload p) { return {true, std::move(p), {1, 9}}; }
protocol::Extraction garbled() { return {false, {}, {1, 9}}; }
protocol::Extraction missing() { return {false, {}, {0, 0}}; }

}  // namespace

TEST_SUITE("scoring") {

TEST_CASE("accuracy is the exact-match fraction with parse failures wrong") {
  std::vector<ScoredPair> pairs{
      pair_of(Percent{357}, Percent{357}),
      pair_of(true, true),
      pair_of(int64_t{5}, int64_t{5}),
      pair_of(int64_t{5}, int64_t{7}),
  };
  CHECK(score_accuracy(pairs) == 0.75);
  pairs.push_back(pair_of(std::monostate{}, int64_t{7}));  // parse failure
  CHECK(score_accuracy(pairs) == 0.6);
  CHECK(!score_accuracy({}).has_value());
  std::vector<ScoredPair> failures{pair_of(std::monostate{}, true),
                                   pair_of(std::monostate{}, int64_t{1})};
  CHECK(score_accuracy(failures) == 0.0);
}

TEST_CASE("micro F1 pools true and false positives across turns") {
  CoordSet a{{1, 1}};
  CHECK(score_f1({pair_of(a, a)}) == 1.0);
  CHECK(score_f1({pair_of(CoordSet{}, a)}) == 0.0);

  // truths {a}, {a,b} against predictions {a,c}, {a}: TP=2 FP=1 FN=1.
  Coord ca{0, 0}, cb{1, 1}, cc{2, 2};
  std::vector<ScoredPair> pooled{
      pair_of(CoordSet{ca, cc}, CoordSet{ca}),
      pair_of(CoordSet{ca}, CoordSet{ca, cb}),
  };
  CHECK(*score_f1(pooled) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK(!score_f1({}).has_value());
  CHECK(!score_f1({pair_of(CoordSet{}, CoordSet{}),
                   pair_of(PathSet{}, PathSet{})})
             .has_value());
}

TEST_CASE("boolean F1 uses the positive class and skips negative agreement") {
  std::vector<ScoredPair> pairs{
      pair_of(true, true),            // TP
      pair_of(true, false),           // FP
      pair_of(false, true),           // FN
      pair_of(false, false),          // nothing
      pair_of(std::monostate{}, false),  // nothing: no positive claim
  };
  CHECK(*score_f1(pairs) == 0.5);  // 2*1 / (2*1 + 1 + 1)
  std::vector<ScoredPair> negatives{pair_of(false, false),
                                    pair_of(std::monostate{}, false)};
  CHECK(!score_f1(negatives).has_value());
}

TEST_CASE("safety maps score each truth-side direction as one boolean") {
  SafetyMap truth{{Direction::Up, true}, {Direction::Down, false}};
  SafetyMap wrong_down{{Direction::Up, true}, {Direction::Down, true}};
  CHECK(*score_f1({pair_of(wrong_down, truth)}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // Directions the truth does not cover are not verifiable.
  SafetyMap extra{{Direction::Up, true}, {Direction::Left, true}};
  CHECK(*score_f1({pair_of(extra, SafetyMap{{Direction::Up, true}})}) == 1.0);
  // A parse failure misses every safe direction but claims none.
  CHECK(*score_f1({pair_of(std::monostate{}, truth)}) == 0.0);
}

TEST_CASE("a parse failure on a set truth yields misses but no claims") {
  PathSet truth{{{1, 1}, {3, 3}}, {{5, 5}}};
  std::vector<ScoredPair> pairs{pair_of(std::monostate{}, truth),
                                pair_of(truth, truth)};
  // FN=2 from the failure, TP=2 from the exact turn.
  CHECK(*score_f1(pairs) == doctest::Approx(4.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("scalar truths degrade to per-item matching under F1") {
  std::vector<ScoredPair> defined{
      pair_of(int64_t{3}, int64_t{3}),
      pair_of(int64_t{4}, int64_t{5}),
      pair_of(BallDirection::RightUp, BallDirection::RightUp),
  };
  // With every prediction defined, each miss is one FP plus one FN, so the
  // pooled F1 equals the accuracy.
  CHECK(*score_accuracy(defined) == *score_f1(defined));
  CHECK(*score_f1(defined) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // A parse failure contributes a miss but no claim: TP=2 FP=1 FN=2.
  auto pairs = defined;
  pairs.push_back(pair_of(std::monostate{}, BallDirection::LeftDown));
  CHECK(*score_accuracy(pairs) == 0.5);
  CHECK(*score_f1(pairs) == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("macro F1 averages defined groups only") {
  CoordSet a{{1, 1}}, b{{2, 2}};
  std::vector<std::vector<ScoredPair>> groups{
      {pair_of(a, a)},
      {pair_of(CoordSet{}, CoordSet{})},  // contributes nothing: skipped
      {pair_of(b, a)},
  };
  CHECK(*score_f1_macro(groups) == 0.5);
  CHECK(!score_f1_macro({}).has_value());
}

TEST_CASE("outcome metric is total reward over total cap") {
  std::vector<MatchRecord> recs;
  for (double r : {1.0, 1.0, 1.0, 0.0, -1.0})
    recs.push_back(bare_record(GameId::TicTacToe, "x", "y", r, -r, 1.0));
  CHECK(*compute_outcome_metric(recs, "x") == 0.4);
  CHECK(*compute_outcome_metric(recs, "y") == -0.4);
  CHECK(!compute_outcome_metric(recs, "z").has_value());

  std::vector<MatchRecord> draws{
      bare_record(GameId::TicTacToe, "x", "y", 0, 0, 1),
      bare_record(GameId::TicTacToe, "y", "x", 0, 0, 1)};
  CHECK(*compute_outcome_metric(draws, "x") == 0.0);

  std::vector<MatchRecord> holdem{
      bare_record(GameId::Holdem, "x", "y", 30, -30, 100),
      bare_record(GameId::Holdem, "y", "x", 10, -10, 100)};
  CHECK(*compute_outcome_metric(holdem, "x") == 0.1);  // 20 / 200
}

TEST_CASE("intermediate metric is the plain mean") {
  CHECK(compute_intermediate_metric({0.5, 0.7}) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(compute_intermediate_metric({1.0, 1.0, 1.0}) == 1.0);
  CHECK_THROWS_AS(compute_intermediate_metric({}), std::invalid_argument);
}

TEST_CASE("score_records aggregates a hand-built match exactly") {
  MatchRecord rec = bare_record(GameId::TicTacToe, "llm", "rnd", 1, -1, 1);
  Coord c00{0, 0}, c11{1, 1}, c22{2, 2}, c99{9, 9};
  rec.turns.push_back(turn_of(0, Seat::First,
                              {CoordSet{c00}, CoordSet{}},
                              {found(CoordSet{c00}), found(CoordSet{})}));
  rec.turns.push_back(turn_of(1, Seat::Second,
                              {CoordSet{}, CoordSet{c11}},
                              {missing(), missing()}));
  rec.turns.push_back(turn_of(2, Seat::First,
                              {CoordSet{c22}, CoordSet{}},
                              {garbled(), found(CoordSet{c99})}));

  Scoreboard board = score_records({rec});
  REQUIRE(board.rows.size() == 2);
  const AgentGameScore& llm = board.rows[0];
  const AgentGameScore& rnd = board.rows[1];
  CHECK(llm.agent_id == "llm");
  CHECK(rnd.agent_id == "rnd");

  CHECK(llm.matches == 1);
  CHECK(llm.turns == 2);
  CHECK(llm.fallbacks == 0);
  CHECK(llm.markers_found == 4);
  CHECK(*llm.outcome == 1.0);
  REQUIRE(llm.subproblems.size() == 2);
  // Subproblem 1: TP=1 (turn 0) + FN=1 (garbled turn 2) -> 2/3.
  CHECK(llm.subproblems[0].pool == 2);
  CHECK(*llm.subproblems[0].value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // Subproblem 2: both-empty turn 0 + FP=1 (turn 2) -> 0.
  CHECK(llm.subproblems[1].pool == 2);
  CHECK(*llm.subproblems[1].value == 0.0);
  CHECK(*llm.intermediate == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK(rnd.turns == 1);
  CHECK(rnd.markers_found == 0);
  CHECK(*rnd.outcome == -1.0);
  CHECK(!rnd.intermediate.has_value());
  CHECK(!rnd.subproblems[0].value.has_value());
  CHECK(!rnd.subproblems[1].value.has_value());
}

TEST_CASE("diagnostic subproblems and engine passes stay out of the metrics") {
  MatchRecord rec = bare_record(GameId::Checkers, "llm", "rnd", 1, -1, 1);
  MovePath jump{{2, 2}, {4, 4}};
  rec.turns.push_back(turn_of(0, Seat::First,
                              {PathSet{jump}, PathSet{}, PathSet{jump}},
                              {found(PathSet{jump}), found(PathSet{}),
                               found(PathSet{})}));
  TurnRecord pass;
  pass.turn_index = 1;
  pass.seat = Seat::Second;
  pass.state_text = "s";
  pass.action_taken = "Pass";
  pass.truths = {std::monostate{}, std::monostate{}, std::monostate{}};
  rec.turns.push_back(pass);

  Scoreboard board = score_records({rec});
  REQUIRE(board.rows.size() == 2);
  const AgentGameScore& llm = board.rows[0];
  REQUIRE(llm.subproblems.size() == 3);
  CHECK(llm.subproblems[0].scored);
  CHECK(!llm.subproblems[2].scored);
  CHECK(*llm.subproblems[0].value == 1.0);
  CHECK(!llm.subproblems[1].value.has_value());  // nothing verifiable
  CHECK(*llm.subproblems[2].value == 0.0);       // logged, wrong, excluded
  CHECK(*llm.intermediate == 1.0);               // only subproblem 1 counts

  const AgentGameScore& rnd = board.rows[1];
  CHECK(rnd.turns == 0);  // the forced pass is not an agent turn
  CHECK(rnd.matches == 1);
}

TEST_CASE("oracle self-verification: I is exactly one against a random foe") {
  auto rnd = agents::make_agent({AgentKind::Random, "rnd"});
  auto oracle = agents::make_agent({AgentKind::OracleScripted, "oracle"});
  std::vector<Agent*> roster{rnd.get(), oracle.get()};
  std::vector<MatchRecord> records;
  for (GameId id : {GameId::TicTacToe, GameId::Connect4}) {
    MatchConfig base;
    base.game_id = id;
    std::vector<MatchRecord> recs = run_tournament(base, roster, 20, 2026);
    records.insert(records.end(), recs.begin(), recs.end());
  }
  Scoreboard board = score_records(records);
  REQUIRE(board.rows.size() == 4);
  for (const AgentGameScore& row : board.rows) {
    CHECK(row.matches == 20);
    if (row.agent_id == "oracle") {
      REQUIRE(row.intermediate.has_value());
      CHECK(*row.intermediate == 1.0);
      for (const SubproblemScore& sub : row.subproblems)
        if (sub.value) CHECK(*sub.value == 1.0);
      REQUIRE(row.outcome.has_value());
      CHECK(*row.outcome >= 0.5);
      CHECK(row.fallbacks == 0);
    } else {
      CHECK(row.markers_found == 0);
      CHECK(!row.intermediate.has_value());
    }
  }
}

TEST_CASE("reports are deterministic and carry the average columns") {
  MatchRecord rec = bare_record(GameId::TicTacToe, "llm", "rnd", 1, -1, 1);
  Coord c00{0, 0};
  rec.turns.push_back(turn_of(0, Seat::First, {CoordSet{c00}, CoordSet{c00}},
                              {found(CoordSet{c00}), found(CoordSet{})}));
  Scoreboard board = score_records({rec});

  std::string csv = scoreboard_csv(board);
  CHECK(csv == scoreboard_csv(board));
  CHECK(csv.find("agent,game,matches,turns,fallback_rate,O,I,I_1,I_2,I_3,"
                 "combined\n") == 0);
  CHECK(csv.find("llm,tictactoe,1,1,0.0000,1.0000,0.5000,1.0000,0.0000,,\n") !=
        std::string::npos);
  CHECK(csv.find("rnd,tictactoe,1,0,0.0000,-1.0000,,,,,\n") !=
        std::string::npos);
  CHECK(csv.find("llm,average,,,,1.0000,0.5000,,,,0.7500\n") !=
        std::string::npos);
  CHECK(csv.find("rnd,average,,,,-1.0000,,,,,-1.0000\n") != std::string::npos);

  std::string text = scoreboard_text(board);
  CHECK(text == scoreboard_text(board));
  CHECK(text.find("Avg. O") != std::string::npos);
  CHECK(text.find("+1.000") != std::string::npos);
  CHECK(text.find("llm") != std::string::npos);
}

}  // TEST_SUITE
