#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arena/payload.hpp"
#include "arena/rng.hpp"

namespace arena {

enum class GameId {
  Othello,
  Pong,
  Surround,
  Checkers,
  TicTacToe,
  Connect4,
  Holdem,
  Negotiation,
};

constexpr std::array<GameId, 8> kAllGames = {
    GameId::Othello,   GameId::Pong,    GameId::Surround, GameId::Checkers,
    GameId::TicTacToe, GameId::Connect4, GameId::Holdem,   GameId::Negotiation,
};

const char* to_string(GameId id);
std::optional<GameId> game_id_from_string(const std::string& name);

enum class Seat { First, Second };

inline Seat other_seat(Seat s) {
  return s == Seat::First ? Seat::Second : Seat::First;
}
const char* to_string(Seat s);

enum class Outcome { Ongoing, FirstWins, SecondWins, Draw };

// How an intermediate subproblem is scored.
enum class MetricKind { Accuracy, SetF1, BoolF1 };

struct SubproblemSpec {
  PayloadKind kind;
  MetricKind metric;
  bool scored;  // two-ply tactic flags are logged but kept out of I
};

struct GameMeta {
  GameId id;
  const char* name;
  bool simultaneous;
  bool zero_sum;
  double reward_cap;     // T_j: the largest |reward| the game can emit
  int avg_turns;         // reference average match length in turns
  std::vector<SubproblemSpec> subproblems;

  int subproblem_count() const { return static_cast<int>(subproblems.size()); }
  int default_max_turns() const { return 4 * avg_turns; }
};

const GameMeta& game_meta(GameId id);

struct GameResult {
  bool terminal = false;
  bool draw = false;  // terminal with no winner (or valueless stop)
  double reward_first = 0.0;
  double reward_second = 0.0;
};

// A playable game.  Implementations are deterministic given the action
// sequence plus the draws they take from the supplied environment stream,
// which is what makes logged matches exactly replayable.
class Game {
 public:
  virtual ~Game() = default;

  virtual GameId id() const = 0;
  const GameMeta& meta() const { return game_meta(id()); }

  virtual void reset(RngStream& env) = 0;

  virtual GameResult result() const = 0;

  // Rewards if the match is cut off right now by the turn cap.
  virtual GameResult cutoff_result() const;

  // Turn-based games only; simultaneous games ignore it.
  virtual Seat to_move() const = 0;

  // A side with no legal action but a live game (Othello pass).  The
  // engine records the forced pass itself; agents are never consulted.
  virtual bool must_pass() const { return false; }
  virtual void apply_pass() {}

  // Canonical action strings, deterministic order.
  virtual std::vector<std::string> legal_actions(Seat seat) const = 0;

  // Validates free-form action text for `seat`; returns the canonical
  // string when it denotes a legal action, nullopt otherwise.
  virtual std::optional<std::string> normalize_action(
      Seat seat, const std::string& action) const;

  // Rendered game state exactly as it is placed into the prompt.
  virtual std::string state_text(Seat viewer) const = 0;

  // Ground truths for every declared subproblem, from `viewer`'s side.
  // Slots that depend on the agent's own reply stay undefined here and
  // are filled in by finalize_truths once the action is known.
  virtual std::vector<Payload> compute_truths(Seat viewer) const = 0;
  virtual void finalize_truths(Seat viewer, const std::string& action,
                               std::vector<Payload>& truths) const;

  virtual void apply(Seat seat, const std::string& action, RngStream& env) = 0;

  // Simultaneous games resolve both actions in one step.
  virtual void apply_both(const std::string& first_action,
                          const std::string& second_action, RngStream& env);

  // The reply a rule-following player would write for this action (the
  // final-answer line only, without intermediate markers).
  virtual std::string reply_for_action(const std::string& action) const = 0;
};

std::unique_ptr<Game> make_game(GameId id);

}  // namespace arena
