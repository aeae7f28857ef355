#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/agent.hpp"
#include "arena/game.hpp"
#include "arena/protocol.hpp"

namespace arena {

enum class InvalidActionPolicy { RandomFallback, ForfeitMatch };
enum class TerminationReason { NaturalEnd, TurnLimit, Forfeit, DrawRule };

const char* to_string(InvalidActionPolicy p);
const char* to_string(TerminationReason r);
std::optional<InvalidActionPolicy> invalid_action_policy_from_string(
    const std::string& name);
std::optional<TerminationReason> termination_reason_from_string(
    const std::string& name);

struct MatchConfig {
  GameId game_id = GameId::TicTacToe;
  uint64_t seed = 0;
  int max_turns = 0;  // 0 = the game's default cap (4x average length)
  protocol::PromptVariant prompt_variant = protocol::PromptVariant::CuratedCoT;
  int parse_retries = 1;
  InvalidActionPolicy invalid_action_policy = InvalidActionPolicy::RandomFallback;
  bool strict_markers = false;

  bool operator==(const MatchConfig&) const = default;
};

// Everything the scorer needs from the raw reply, as extracted.
struct ParsedResponse {
  protocol::ActionExtraction action;
  std::vector<protocol::Extraction> intermediates;  // one per subproblem

  bool operator==(const ParsedResponse&) const = default;
};

struct TurnRecord {
  int turn_index = 0;
  Seat seat = Seat::First;
  std::string state_text;
  std::string prompt_text;
  std::string raw_reply;
  ParsedResponse parsed;
  std::vector<Payload> truths;  // finalized; one per declared subproblem
  std::string action_taken;     // canonical, legal in the pre-turn state
  bool action_was_fallback = false;

  bool operator==(const TurnRecord&) const = default;
};

// True for a forced pass the engine applied itself: the agent was never
// consulted, so the turn carries no prompt, reply, or defined truths
// and is skipped by scoring.
bool is_engine_pass(const TurnRecord& turn);

struct MatchRecord {
  MatchConfig config;
  std::array<std::string, 2> agent_ids;  // seat First, seat Second
  std::vector<TurnRecord> turns;
  double reward_first = 0.0;
  double reward_second = 0.0;
  double reward_cap = 1.0;
  TerminationReason termination_reason = TerminationReason::NaturalEnd;

  bool operator==(const MatchRecord&) const = default;
};

// Plays one match to completion.  Deterministic given (config, agent
// replies): all environment and fallback randomness derives from
// config.seed.  Truths are computed before the mover's reply is read.
MatchRecord run_match(const MatchConfig& config, Agent& first, Agent& second);

// Round robin: matches_per_pair matches (must be even) for every
// unordered agent pair, half with each seat order.  Seeds derive from
// (base_seed, pair index, match index); base.seed is ignored.
std::vector<MatchRecord> run_tournament(const MatchConfig& base,
                                        const std::vector<Agent*>& agents,
                                        int matches_per_pair,
                                        uint64_t base_seed);

}  // namespace arena
