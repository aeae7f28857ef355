#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arena/game.hpp"
#include "arena/rng.hpp"

namespace arena {

// Transport or provider failure after exhausting an agent's own retries.
// The engine treats it like an unparseable reply: turn retry, then the
// configured invalid-action policy.
struct AgentFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What an agent sees when asked to move.  `game` is the live pre-turn
// state; agents may only inspect it (the engine owns all mutation).
struct TurnView {
  const Game& game;
  Seat seat;
  const std::string& prompt;
  const std::vector<std::string>& legal_actions;  // canonical, nonempty
};

// Agents must tolerate concurrent reply() calls from parallel matches;
// all per-call randomness comes from the supplied stream.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual const std::string& id() const = 0;
  virtual std::string reply(const TurnView& view, RngStream& rng) = 0;
  // False for agents that never write intermediate markers (the score
  // report prints "-" instead of 0 for them).
  virtual bool emits_intermediates() const { return true; }
};

}  // namespace arena
