#include "arena/game.hpp"

#include <stdexcept>

namespace arena {

const char* to_string(GameId id) {
  switch (id) {
    case GameId::Othello: return "othello";
    case GameId::Pong: return "pong";
    case GameId::Surround: return "surround";
    case GameId::Checkers: return "checkers";
    case GameId::TicTacToe: return "tictactoe";
    case GameId::Connect4: return "connect4";
    case GameId::Holdem: return "holdem";
    case GameId::Negotiation: return "negotiation";
  }
  return "?";
}

std::optional<GameId> game_id_from_string(const std::string& name) {
  for (GameId id : kAllGames) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

const char* to_string(Seat s) {
  return s == Seat::First ? "first" : "second";
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Up: return "Up";
    case Direction::Down: return "Down";
    case Direction::Left: return "Left";
    case Direction::Right: return "Right";
  }
  return "?";
}

const char* to_string(BallDirection d) {
  switch (d) {
    case BallDirection::LeftDown: return "Left Down";
    case BallDirection::RightUp: return "Right Up";
    case BallDirection::LeftUp: return "Left Up";
    case BallDirection::RightDown: return "Right Down";
  }
  return "?";
}

const GameMeta& game_meta(GameId id) {
  // Subproblem slots follow the numbering used by the prompt markers.
  static const GameMeta othello{
      GameId::Othello, "othello", false, true, 1.0, 63,
      {{PayloadKind::Bool, MetricKind::BoolF1, true},
       {PayloadKind::OthelloCoordSet, MetricKind::SetF1, true}}};
  static const GameMeta pong{
      GameId::Pong, "pong", true, true, 1.0, 144,
      {{PayloadKind::BallDir, MetricKind::Accuracy, true},
       {PayloadKind::Int, MetricKind::Accuracy, true}}};
  static const GameMeta surround{
      GameId::Surround, "surround", true, true, 1.0, 84,
      {{PayloadKind::Adjacent, MetricKind::Accuracy, true},
       {PayloadKind::Actions, MetricKind::Accuracy, true},
       {PayloadKind::Safety, MetricKind::BoolF1, true}}};
  static const GameMeta checkers{
      GameId::Checkers, "checkers", false, true, 1.0, 76,
      {{PayloadKind::PathSet, MetricKind::SetF1, true},
       {PayloadKind::PathSet, MetricKind::SetF1, true},
       // Two-for-one shots are recorded for analysis but not aggregated.
       {PayloadKind::PathSet, MetricKind::SetF1, false}}};
  static const GameMeta tictactoe{
      GameId::TicTacToe, "tictactoe", false, true, 1.0, 7,
      {{PayloadKind::CoordSet, MetricKind::SetF1, true},
       {PayloadKind::CoordSet, MetricKind::SetF1, true}}};
  static const GameMeta connect4{
      GameId::Connect4, "connect4", false, true, 1.0, 19,
      {{PayloadKind::CoordSet, MetricKind::SetF1, true},
       {PayloadKind::CoordSet, MetricKind::SetF1, true}}};
  static const GameMeta holdem{
      GameId::Holdem, "holdem", false, true, 100.0, 9,
      {{PayloadKind::Percent, MetricKind::Accuracy, true},
       {PayloadKind::Int, MetricKind::Accuracy, true}}};
  static const GameMeta negotiation{
      GameId::Negotiation, "negotiation", false, false, 30.0, 8,
      {{PayloadKind::Int, MetricKind::Accuracy, true},
       {PayloadKind::Int, MetricKind::Accuracy, true}}};

  switch (id) {
    case GameId::Othello: return othello;
    case GameId::Pong: return pong;
    case GameId::Surround: return surround;
    case GameId::Checkers: return checkers;
    case GameId::TicTacToe: return tictactoe;
    case GameId::Connect4: return connect4;
    case GameId::Holdem: return holdem;
    case GameId::Negotiation: return negotiation;
  }
  throw std::logic_error("unknown game id");
}

GameResult Game::cutoff_result() const {
  GameResult r;
  r.terminal = true;
  r.draw = true;
  return r;
}

std::optional<std::string> Game::normalize_action(
    Seat seat, const std::string& action) const {
  for (const std::string& a : legal_actions(seat)) {
    if (a == action) return a;
  }
  return std::nullopt;
}

void Game::finalize_truths(Seat, const std::string&,
                           std::vector<Payload>&) const {}

void Game::apply_both(const std::string&, const std::string&, RngStream&) {
  throw std::logic_error("apply_both on a turn-based game");
}

}  // namespace arena
