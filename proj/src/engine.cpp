#include <stdexcept>

#include "arena/engine.hpp"

namespace arena {

const char* to_string(InvalidActionPolicy p) {
  switch (p) {
    case InvalidActionPolicy::RandomFallback: return "random_fallback";
    case InvalidActionPolicy::ForfeitMatch: return "forfeit_match";
  }
  return "?";
}

const char* to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::NaturalEnd: return "natural_end";
    case TerminationReason::TurnLimit: return "turn_limit";
    case TerminationReason::Forfeit: return "forfeit";
    case TerminationReason::DrawRule: return "draw_rule";
  }
  return "?";
}

std::optional<InvalidActionPolicy> invalid_action_policy_from_string(
    const std::string& name) {
  if (name == "random_fallback") return InvalidActionPolicy::RandomFallback;
  if (name == "forfeit_match") return InvalidActionPolicy::ForfeitMatch;
  return std::nullopt;
}

std::optional<TerminationReason> termination_reason_from_string(
    const std::string& name) {
  if (name == "natural_end") return TerminationReason::NaturalEnd;
  if (name == "turn_limit") return TerminationReason::TurnLimit;
  if (name == "forfeit") return TerminationReason::Forfeit;
  if (name == "draw_rule") return TerminationReason::DrawRule;
  return std::nullopt;
}

bool is_engine_pass(const TurnRecord& turn) {
  return turn.action_taken == "Pass" && turn.prompt_text.empty();
}

namespace {

// Stream labels under a match seed; keeping them distinct means agent
// randomness can never perturb deals or fallback draws.
constexpr uint64_t kEnvLabel = 0;
constexpr uint64_t kAgentLabel = 1;
constexpr uint64_t kFallbackLabel = 2;

struct MatchRunner {
  const MatchConfig& config;
  Game& game;
  Agent& first;
  Agent& second;
  MatchRecord& rec;
  int max_turns;
  RngStream env;
  RngStream agent_rng;
  RngStream fallback_rng;
  int turn_index = 0;
  std::optional<Seat> forfeiter;

  Agent& agent_of(Seat s) { return s == Seat::First ? first : second; }

  // Forced passes are applied by the engine without consulting agents.
  // Each one is still recorded as a turn, with every truth undefined so
  // no subproblem is scored against it.
  void apply_forced_passes() {
    for (int guard = 0; guard < 4 && !game.result().terminal && game.must_pass();
         ++guard) {
      TurnRecord tr;
      tr.turn_index = turn_index++;
      tr.seat = game.to_move();
      tr.state_text = game.state_text(tr.seat);
      tr.truths.resize(game.meta().subproblems.size());
      tr.action_taken = "Pass";
      rec.turns.push_back(std::move(tr));
      game.apply_pass();
    }
  }

  // Prompts one seat and resolves its reply to a legal action.  Returns
  // the finished record; action_taken is empty only on forfeit.
  TurnRecord take_turn(Seat seat) {
    TurnRecord tr;
    tr.turn_index = turn_index++;
    tr.seat = seat;
    tr.state_text = game.state_text(seat);
    tr.prompt_text = protocol::render_prompt(config.game_id,
                                             config.prompt_variant,
                                             tr.state_text);
    tr.truths = game.compute_truths(seat);
    std::vector<std::string> legal = game.legal_actions(seat);
    if (legal.empty()) throw std::logic_error("turn taken with no legal action");
    TurnView view{game, seat, tr.prompt_text, legal};

    std::optional<std::string> action;
    for (int attempt = 0; attempt <= config.parse_retries && !action; ++attempt) {
      try {
        tr.raw_reply = agent_of(seat).reply(view, agent_rng);
      } catch (const AgentFailure&) {
        tr.raw_reply.clear();
        tr.parsed = ParsedResponse{};
        continue;
      }
      tr.parsed.action = protocol::extract_action(tr.raw_reply, config.game_id);
      tr.parsed.intermediates = protocol::extract_intermediates(
          tr.raw_reply, config.game_id, config.strict_markers);
      if (tr.parsed.action.ok)
        if (auto canon = game.normalize_action(seat, tr.parsed.action.text))
          action = *canon;
    }
    if (!action) {
      if (config.invalid_action_policy == InvalidActionPolicy::ForfeitMatch) {
        forfeiter = seat;
        return tr;
      }
      action = legal[fallback_rng.uniform(legal.size())];
      tr.action_was_fallback = true;
    }
    tr.action_taken = *action;
    game.finalize_truths(seat, *action, tr.truths);
    return tr;
  }

  void run() {
    game.reset(env);
    const bool simultaneous = game.meta().simultaneous;
    while (!forfeiter) {
      apply_forced_passes();
      if (game.result().terminal) break;
      if (turn_index >= max_turns ||
          (simultaneous && turn_index + 2 > max_turns)) {
        GameResult r = game.cutoff_result();
        rec.reward_first = r.reward_first;
        rec.reward_second = r.reward_second;
        rec.termination_reason = TerminationReason::TurnLimit;
        return;
      }
      if (simultaneous) {
        TurnRecord a = take_turn(Seat::First);
        rec.turns.push_back(a);
        if (forfeiter) break;
        TurnRecord b = take_turn(Seat::Second);
        rec.turns.push_back(b);
        if (forfeiter) break;
        game.apply_both(a.action_taken, b.action_taken, env);
      } else {
        Seat mover = game.to_move();
        TurnRecord tr = take_turn(mover);
        rec.turns.push_back(tr);
        if (forfeiter) break;
        game.apply(mover, tr.action_taken, env);
      }
    }
    if (forfeiter) {
      rec.reward_first = *forfeiter == Seat::First ? -1.0 : 1.0;
      rec.reward_second = -rec.reward_first;
      rec.termination_reason = TerminationReason::Forfeit;
      return;
    }
    GameResult r = game.result();
    rec.reward_first = r.reward_first;
    rec.reward_second = r.reward_second;
    rec.termination_reason =
        r.draw ? TerminationReason::DrawRule : TerminationReason::NaturalEnd;
  }
};

}  // namespace

MatchRecord run_match(const MatchConfig& config, Agent& first, Agent& second) {
  if (config.parse_retries < 0)
    throw std::invalid_argument("parse_retries must be non-negative");
  std::unique_ptr<Game> game = make_game(config.game_id);
  const GameMeta& meta = game->meta();
  MatchRecord rec;
  rec.config = config;
  if (rec.config.max_turns <= 0) rec.config.max_turns = meta.default_max_turns();
  rec.agent_ids = {first.id(), second.id()};
  rec.reward_cap = meta.reward_cap;
  MatchRunner runner{config,
                     *game,
                     first,
                     second,
                     rec,
                     rec.config.max_turns,
                     derive_rng(config.seed, {kEnvLabel}),
                     derive_rng(config.seed, {kAgentLabel}),
                     derive_rng(config.seed, {kFallbackLabel}),
                     0,
                     std::nullopt};
  runner.run();
  return rec;
}

std::vector<MatchRecord> run_tournament(const MatchConfig& base,
                                        const std::vector<Agent*>& agents,
                                        int matches_per_pair,
                                        uint64_t base_seed) {
  if (matches_per_pair <= 0 || matches_per_pair % 2 != 0)
    throw std::invalid_argument("matches_per_pair must be positive and even");
  if (agents.size() < 2)
    throw std::invalid_argument("a tournament needs at least two agents");
  std::vector<MatchRecord> out;
  uint64_t pair_index = 0;
  for (size_t i = 0; i < agents.size(); ++i) {
    for (size_t j = i + 1; j < agents.size(); ++j, ++pair_index) {
      for (int m = 0; m < matches_per_pair; ++m) {
        MatchConfig cfg = base;
        cfg.seed = mix_seed(mix_seed(base_seed, pair_index),
                            static_cast<uint64_t>(m));
        Agent* a = agents[i];
        Agent* b = agents[j];
        if (m % 2 == 1) std::swap(a, b);
        out.push_back(run_match(cfg, *a, *b));
      }
    }
  }
  return out;
}

}  // namespace arena
